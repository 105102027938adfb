#!/usr/bin/env python
from setuptools import find_packages, setup

setup(
    name='struve-turan',
    version='0.1.0',
    description=(
        'Struve function evaluation and grid checks of Turan-type inequalities'
    ),
    author='Student.com',
    packages=find_packages(exclude=['test', 'test.*', 'docs', 'docs.*']),
    install_requires=[
        "mpmath>=1.1.0",
        "numpy>=1.16",
        "six>=1.12",
        "wrapt>=1.11",
    ],
    extras_require={
        'dev': [
            "coverage==7.2.7",
            "flake8==6.1.0",
            "hypothesis==6.82.0",
            "mock==5.1.0",
            "pylint==2.17.5",
            "pytest==7.4.0",
            "scipy>=1.7",
        ],
        'examples': []
    },
    entry_points={
        'console_scripts': [
            'struve-turan=struve_turan.cli:main',
        ]
    },
    dependency_links=[],
    zip_safe=True,
    license='Apache License, Version 2.0',
    classifiers=[
        "Programming Language :: Python",
        "Operating System :: MacOS :: MacOS X",
        "Operating System :: POSIX",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.7",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Software Development :: Libraries :: Python Modules",
        "Intended Audience :: Science/Research",
    ]
)

from struve_turan.bessel import bessel_j
from struve_turan.inequalities import (
    Evaluation, Inequality, TuranNegativeOrder, evaluate_grid
)
from struve_turan.grid import make_grid


class BesselTuran(Inequality):
    """ ``J_nu(x)**2 - J_(nu-1)(x) J_(nu+1)(x) >= 0``.

    The Bessel counterpart of the Struve checks, on the same grid driver.
    """
    theorem_id = 'bessel_turan'
    nu_min = 0.0
    nu_min_open = True

    def evaluate(self, nu, x, y=None, order=None):
        here = bessel_j(nu, x)
        below = bessel_j(nu - 1.0, x)
        above = bessel_j(nu + 1.0, x)
        product = below.value * above.value
        scale = max(1.0, here.value ** 2, abs(product))
        return Evaluation(
            here.value ** 2, product, scale, here.method,
            2.0 * abs(here.value) * here.est_error
            + abs(below.value) * above.est_error
            + abs(above.value) * below.est_error
        )


class StrictTuran(TuranNegativeOrder):
    """ Flags every negative margin, however small.
    """
    tolerance = 0.0


def check(inequality, nu_range, x_range):
    """ Evaluate `inequality` on a grid and return its report.
    """
    return evaluate_grid(inequality, make_grid(nu_range, x_range))


if __name__ == '__main__':
    for inequality, nus, xs in (
        (BesselTuran(), '0.5:3:0.5', '0.5:20:0.5'),
        (StrictTuran(), '-1.5:-0.5:0.25', '0.5:20:0.5'),
    ):
        report = check(inequality, nus, xs)
        print("{}: min margin {:.3g} at {}, {} violations".format(
            report.theorem_id, report.min_margin, report.argmin,
            len(report.violations)))

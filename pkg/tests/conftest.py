from fractions import Fraction

from qhook.exactpoly import DensePoly


def central_cumulants(p: DensePoly) -> list[Fraction]:
    """kappa_1..kappa_4 of a coefficient distribution via central moments."""
    total = p.mass
    pts = [(p.offset + i, Fraction(c, total)) for i, c in enumerate(p.coeffs) if c]
    mean = sum(x * w for x, w in pts)
    mu = [sum((x - mean) ** k * w for x, w in pts) for k in range(5)]
    return [mean, mu[2], mu[3], mu[4] - 3 * mu[2] ** 2]


def poly_from_list(coeffs_high_to_low: list[int]) -> DensePoly:
    return DensePoly(0, tuple(reversed(coeffs_high_to_low)))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

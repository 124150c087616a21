"""S_d-hypergeometric Bernoulli numbers and polynomials.

B_{d,n}(m) is defined by

    1 / 1sigma1(1; m+1; t) = sum_n B_{d,n}(m) t**n / [n]_d!

and m = 1 gives the plain S_d-Bernoulli numbers. Two independent routes
compute the numbers: exact inversion of the truncated series (ground
truth) and an explicit sum over integer compositions (oracle, capped at
``COMPOSITION_CAP``).
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sdcalc import kernels
from sdcalc.combinatorics import (
    _check_d,
    _check_index,
    hoggatt_binomial,
    sd_factorial,
    sd_number,
    sd_pochhammer,
)
from sdcalc.errors import ConsistencyError, DomainError, ResourceLimitError
from sdcalc.polynomials import Polynomial, hoggatt_translate, sd_derivative_operator_form
from sdcalc.report import IdentityReport
from sdcalc.series import TruncatedSeries, exp_d_series, one_sigma_one_tail

SERIES_INVERSION = "series-inversion"
COMPOSITION_SUM = "composition-sum"

# 2**(n-1) compositions; 18 keeps a single value well under a second
COMPOSITION_CAP = 18


@dataclass(frozen=True)
class BernoulliTable:
    d: int
    m: int
    values: tuple
    method: str

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class BernoulliPolynomialFamily:
    d: int
    m: int
    polynomials: tuple

    def __getitem__(self, n):
        return self.polynomials[n]

    def __len__(self):
        return len(self.polynomials)


def _check_m(m):
    if not isinstance(m, int) or m < 1:
        raise DomainError(f"hypergeometric order m must be an integer >= 1, got {m!r}")


@lru_cache(maxsize=256)
def _series_values(d, m, order):
    inv = one_sigma_one_tail(d, m, order).inverse()
    return tuple(c * sd_factorial(d, n) for n, c in enumerate(inv.coeffs))


def bernoulli_numbers_series(d, m, order):
    """B_{d,0}(m) .. B_{d,order}(m) by inverting 1sigma1(1; m+1; t)."""
    _check_d(d)
    _check_m(m)
    _check_index("order", order)
    return BernoulliTable(d, m, _series_values(d, m, order), SERIES_INVERSION)


def bernoulli_numbers_composition(d, m, n, cap=COMPOSITION_CAP):
    """B_{d,n}(m) = sum over compositions (k_1..k_i) of n of

        (-1)**i [n]_d! / ((m+1)_{d,k_1} ... (m+1)_{d,k_i})
    """
    _check_d(d)
    _check_m(m)
    _check_index("n", n)
    if n > cap:
        raise ResourceLimitError(
            f"composition sum for n={n} visits {2 ** (n - 1)} compositions "
            f"(cap n={cap}); use bernoulli_numbers_series instead"
        )
    dens = [1] + [sd_pochhammer(d, m + 1, k) for k in range(1, n + 1)]
    return sd_factorial(d, n) * kernels.composition_sum(dens, n)


def bernoulli_table_composition(d, m, order, cap=COMPOSITION_CAP):
    values = tuple(bernoulli_numbers_composition(d, m, n, cap) for n in range(order + 1))
    return BernoulliTable(d, m, values, COMPOSITION_SUM)


@lru_cache(maxsize=64)
def plain_bernoulli_numbers(d, order):
    """B_{d,n} straight from t / (exp_d(t) - 1), without the 1sigma1 route."""
    _check_d(d)
    shifted = TruncatedSeries(exp_d_series(d, order + 1).coeffs[1:])
    inv = shifted.inverse()
    return tuple(c * sd_factorial(d, n) for n, c in enumerate(inv.coeffs))


@lru_cache(maxsize=256)
def _family(d, m, order):
    nums = _series_values(d, m, order)
    polys = []
    for n in range(order + 1):
        coeffs = [hoggatt_binomial(d, n, n - j) * nums[n - j] for j in range(n + 1)]
        polys.append(Polynomial(coeffs))
    return tuple(polys)


def bernoulli_polynomials(d, m, order):
    """B_{d,n}(m; x) = sum_k <n k>_d B_{d,k}(m) x**(n-k) for n <= order."""
    _check_d(d)
    _check_m(m)
    _check_index("order", order)
    return BernoulliPolynomialFamily(d, m, _family(d, m, order))


# -- identity catalogue ----------------------------------------------------

_TRANSLATION_YS = (Fraction(1), Fraction(-2, 3), Fraction(5, 7), Fraction(0))


def _witness(lhs, rhs):
    return {"lhs": str(lhs), "rhs": str(rhs)}


def _derivative(d, m, n, fam, nums):
    lhs = sd_derivative_operator_form(fam[n], d)
    rhs = fam[n - 1] * sd_number(d, n)
    return lhs == rhs, _witness(lhs, rhs)


def _translation(d, m, n, fam, nums):
    # right side: Cauchy product of the family's generating function with exp_d(y t)
    for y in _TRANSLATION_YS:
        lhs = hoggatt_translate(fam, d, n, y)
        acc = Polynomial()
        for k in range(n + 1):
            acc = acc + fam[k] * Fraction(y ** (n - k),
                                          sd_factorial(d, k) * sd_factorial(d, n - k))
        rhs = acc * sd_factorial(d, n)
        if lhs != rhs:
            return False, dict(_witness(lhs, rhs), y=str(y))
    return True, {}


def _shift_by_one(d, m, n, fam, nums):
    lhs = hoggatt_translate(fam, d, n, 1)
    top = min(n, m - 1)
    for k in range(top + 1):
        lhs = lhs - fam[n - k] * hoggatt_binomial(d, n, k)
    rhs = Polynomial() if n < m else Polynomial.monomial(n - m, hoggatt_binomial(d, n, m))
    return lhs == rhs, _witness(lhs, rhs)


def _value_at_one(d, m, n, fam, nums):
    lhs = fam[n](1)
    top = n if n < m else (n - 1 if n == m else m - 1)
    rhs = sum((hoggatt_binomial(d, n, k) * nums[n - k] for k in range(top + 1)), Fraction(0))
    if n == m:
        rhs += 1
    return lhs == rhs, _witness(lhs, rhs)


def _inversion_weight(d, m, n, k):
    return Fraction(sd_factorial(d, n), sd_pochhammer(d, m + 1, k) * sd_factorial(d, n - k))


def _inversion(d, m, n, fam, nums):
    rhs = Polynomial()
    delta = Fraction(0)
    for k in range(n + 1):
        w = _inversion_weight(d, m, n, k)
        rhs = rhs + fam[n - k] * w
        delta += w * nums[n - k]
    lhs = Polynomial.monomial(n)
    expected_delta = 1 if n == 0 else 0
    ok = lhs == rhs and delta == expected_delta
    return ok, dict(_witness(lhs, rhs), delta=str(delta))


def _difference(d, m, n, fam, nums):
    lhs = hoggatt_translate(fam, d, n, 1) - fam[n]
    rhs = Polynomial.monomial(n - 1, sd_number(d, n))
    ok = lhs == rhs
    witness = _witness(lhs, rhs)
    if n >= 2:
        at_one = fam[n](1)
        ok = ok and at_one == nums[n]
        witness["value_at_1"] = str(at_one)
    return ok, witness


def _plain_inversion(d, m, n, fam, nums):
    rhs = Polynomial()
    for k in range(n + 1):
        rhs = rhs + fam[n - k] * (hoggatt_binomial(d, n, k) / sd_number(d, k + 1))
    lhs = Polynomial.monomial(n)
    return lhs == rhs, _witness(lhs, rhs)


def _method_agreement(d, m, n, fam, nums):
    other = bernoulli_numbers_composition(d, m, n)
    return other == nums[n], {"series": str(nums[n]), "composition": str(other)}


def _m_reduction(d, m, n, fam, nums):
    plain = plain_bernoulli_numbers(d, n)[n]
    return plain == nums[n], _witness(nums[n], plain)


def _small_n(d, m, n, fam, nums):
    s2, s3 = sd_number(d, 2), sd_number(d, 3)
    rhs = Fraction(-1, s2) if n == 1 else Fraction(s3 - s2, s2 * s3)
    return nums[n] == rhs, _witness(nums[n], rhs)


@dataclass(frozen=True)
class _Identity:
    key: str
    name: str
    check: object
    min_n: int = 0
    max_n: int = None
    plain_only: bool = False


IDENTITIES = {
    ident.key: ident
    for ident in (
        _Identity("I1", "derivative", _derivative, min_n=1),
        _Identity("I2", "translation", _translation),
        _Identity("I3", "shift-by-one", _shift_by_one),
        _Identity("I4", "value-at-one", _value_at_one),
        _Identity("I5", "inversion", _inversion),
        _Identity("I6", "difference", _difference, min_n=1, plain_only=True),
        _Identity("I7", "plain-inversion", _plain_inversion, plain_only=True),
        _Identity("I8", "method-agreement", _method_agreement, max_n=COMPOSITION_CAP),
        _Identity("I9", "m-reduction", _m_reduction, plain_only=True),
        _Identity("I10", "small-n-formulas", _small_n, min_n=1, max_n=2, plain_only=True),
    )
}
_ALIASES = {ident.name: key for key, ident in IDENTITIES.items()}


def resolve_identity(identity):
    key = str(identity).strip()
    if key.upper() in IDENTITIES:
        return IDENTITIES[key.upper()]
    if key.lower() in _ALIASES:
        return IDENTITIES[_ALIASES[key.lower()]]
    raise DomainError(f"unknown identity {identity!r}")


def verify_identity(identity, d_range, m_range, n_range):
    """Check one catalogue identity on every (d, m, n) in the given ranges.

    Plain-only identities (m = 1 statements) ignore ``m_range``. Reports are
    ordered by (d, m, n).
    """
    ident = resolve_identity(identity)
    ns = sorted(set(n_range))
    ms = [1] if ident.plain_only else sorted(set(m_range))
    reports = []
    for d in sorted(set(d_range)):
        _check_d(d)
        for m in ms:
            _check_m(m)
            todo = [n for n in ns if n >= ident.min_n
                    and (ident.max_n is None or n <= ident.max_n)]
            if not todo:
                continue
            top = max(todo)
            fam = _family(d, m, top)
            nums = _series_values(d, m, top)
            for n in todo:
                ok, witness = ident.check(d, m, n, fam, nums)
                note = ""
                if ident.key == "I6" and n == 1:
                    note = "value claim B(1) = B(0) not checked at n = 1 (0**0 defect)"
                reports.append(IdentityReport(
                    identity=f"{ident.key}:{ident.name}",
                    params={"d": d, "m": m, "n": n},
                    passed=bool(ok),
                    witness={} if ok else witness,
                    note=note,
                ))
    return reports


# -- printed tables --------------------------------------------------------

PRINTED_TABLES = {
    2: ("1", "-1/3", "1/2", "-1/10", "2/45"),
    3: ("1", "-1/4", "3/20", "-7/40", "97/280"),
    4: ("1", "-1/5", "2/15", "-8/35", "2237/210"),
    5: ("1", "-1/6", "5/42", "-15/56", "1755/1334"),
}


def audit_paper_tables():
    """Compare computed plain B_{d,n} with the published first values.

    Each computed value is confirmed by both methods before comparison; a
    mismatch is reported, never raised.
    """
    reports = []
    for d, printed in PRINTED_TABLES.items():
        series = bernoulli_numbers_series(d, 1, len(printed) - 1)
        for n, text in enumerate(printed):
            computed = series[n]
            composition = bernoulli_numbers_composition(d, 1, n)
            if composition != computed:
                raise ConsistencyError(
                    f"methods disagree at d={d}, n={n}: {computed} vs {composition}"
                )
            match = computed == Fraction(text)
            reports.append(IdentityReport(
                identity="printed-table",
                params={"d": d, "n": n},
                passed=match,
                witness={"computed": str(computed), "printed": text,
                         "composition": str(composition)},
                note="" if match else "printed value disagrees with both methods",
            ))
    return reports

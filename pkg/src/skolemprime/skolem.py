"""Zero detection at prime-parameterised indices.

The decision procedures rest on one congruence per family: for every prime p
the term at the family index is congruent modulo pO to a fixed nonzero
element b (v_l, or v_(S_1) for sum patterns).  A zero at that index forces
b into pO, hence p | N(b), so only the prime divisors of N(b) need checking.
Everything the argument does not cover -- the k = 0 indices, primes that may
ramify, indices too large to evaluate -- is checked or reported separately.
"""

from __future__ import annotations

import json
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional

from . import arith
from .errors import (InvalidArgumentError, InvalidFamilyError, NotGaloisError,
                     PartialFactorizationError, ResourceError)
from .lrs import (ExpPolySequence, _coeff_at, _eval_mod, associated_simple, eval_exp_poly,
                  eval_exp_poly_mod, scale_to_integral)
from .number_field import (FieldElement, _pow_mod_coords, divisors, nf_norm, nf_pow,
                           ramified_candidates, splitting_data)

REPORT_SCHEMA = "skolemprime.report/1"


# ---------------------------------------------------------------------------
# families and configuration
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PrimePower:
    """n = p^k with k_min <= k <= c."""

    c: int
    k_min: int = 0
    name = "prime-power"


@dataclass(frozen=True)
class PrimePowerMultiple:
    """n = l p^k with l admissible (1 <= l <= c, v_l != 0) and k_min <= k <= c."""

    c: int
    k_min: int = 0
    name = "multiple"


@dataclass(frozen=True)
class InertialFamily:
    """n = l p^(k f(p)), f(p) the inertial degree of p; needs a Galois field."""

    c: int
    k_min: int = 0
    name = "inertial"


@dataclass(frozen=True)
class SumFamily:
    """n = S_p = sum_j l_j p^(k_j f(p)) for one fixed pattern of (l_j, k_j)."""

    pairs: tuple
    c: Optional[int] = None
    name = "sum"

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((int(l), int(k)) for l, k in self.pairs))

    @property
    def s1(self) -> int:
        return sum(l for l, _ in self.pairs)

    def index(self, p: int, f: int) -> int:
        return sum(l * p ** (k * f) for l, k in self.pairs)


def validate_family(family) -> None:
    if isinstance(family, SumFamily):
        if not family.pairs:
            raise InvalidFamilyError("a sum pattern needs at least one (l, k) pair")
        if any(l < 0 or k < 0 for l, k in family.pairs):
            raise InvalidFamilyError("sum pattern entries must be non-negative")
        if family.s1 < 1:
            raise InvalidFamilyError("sum pattern must have positive total weight")
        if family.c is not None and any(l > family.c or k > family.c for l, k in family.pairs):
            raise InvalidFamilyError(f"sum pattern entries exceed the bound c={family.c}")
        return
    if not isinstance(family, (PrimePower, PrimePowerMultiple, InertialFamily)):
        raise InvalidFamilyError(f"unknown family {family!r}")
    if family.c < 0 or family.k_min < 0:
        raise InvalidFamilyError("family bounds must be non-negative")
    if family.k_min > family.c:
        raise InvalidFamilyError("k_min exceeds c: the family is empty")


@dataclass(frozen=True)
class DecideConfig:
    exact_ceiling: int = 2**20
    witness_count: int = 16
    witness_seed: int = 0
    factor_effort: int = 2_000_000
    workers: int = 1
    witnesses: tuple = ()   # explicit witness primes; overrides the seeded draw


# ---------------------------------------------------------------------------
# building blocks
# ---------------------------------------------------------------------------

class Multipliers(NamedTuple):
    values: list       # [(l, v_l)] with v_l != 0
    u0_zero: bool      # v identically zero, so u_0 = v_0 = 0


def admissible_multipliers(seq: ExpPolySequence, c: int) -> Multipliers:
    """The admissible multipliers l in 1..c (those with v_l != 0) with their values."""
    v, is_zero = associated_simple(seq)
    if is_zero:
        return Multipliers([], True)
    out = []
    for l in range(1, c + 1):
        val = eval_exp_poly(v, l)
        if val:
            out.append((l, val))
    return Multipliers(out, False)


class Candidates(NamedTuple):
    value: FieldElement
    norm: int
    primes: tuple


def _integral_norm(b: FieldElement) -> int:
    N = nf_norm(b.field, b)
    if N.denominator != 1:
        raise InvalidArgumentError("norm is not an integer; the sequence is not integral")
    return int(N)


def candidate_primes(seq: ExpPolySequence, ell: int, *, effort: int = 2_000_000) -> Candidates:
    """Prime divisors of |N(v_l)|, the only primes at which l p^k can be a zero."""
    if not seq.integral_certified:
        raise InvalidArgumentError("candidate_primes needs an integral sequence; scale it first")
    v, is_zero = associated_simple(seq)
    value = eval_exp_poly(v, ell) if not is_zero else seq.field.zero
    return _candidates_for(value, effort)


def _candidates_for(value: FieldElement, effort: int) -> Candidates:
    if not value:
        raise InvalidArgumentError("v_l = 0: there is no prime bound")
    N = _integral_norm(value)
    return Candidates(value, abs(N), tuple(arith.prime_divisors(N, effort=effort)))


@dataclass(frozen=True)
class ZeroStatus:
    kind: str                      # "zero" | "nonzero" | "too_large"
    method: str                    # "exact" | "witness" | "none"
    witness: Optional[int] = None
    value: Optional[FieldElement] = None
    witness_results: tuple = ()    # ((q, image), ...)

    @property
    def is_zero(self) -> bool:
        return self.kind == "zero"


def witness_primes(count: int, seed: int, avoid: int = 1) -> list:
    """``count`` distinct primes in [2^31, 2^32), reproducible from ``seed``."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        q = arith.next_prime(rng.randrange(2**31, 2**32))
        if q < 2**32 and avoid % q and q not in out:
            out.append(q)
    return out


def verify_candidate(seq: ExpPolySequence, n: int, config: DecideConfig = DecideConfig(),
                     avoid: int = 1) -> ZeroStatus:
    """Decide u_n = 0 where affordable, otherwise try to certify u_n != 0.

    Indices up to ``exact_ceiling`` are evaluated exactly.  Beyond it, u_n is
    reduced modulo witness primes; a nonzero image proves u_n != 0.  Zero is
    only ever reported from an exact evaluation.
    """
    if not seq.integral_certified:
        raise InvalidArgumentError("verify_candidate needs an integral sequence")
    if n <= config.exact_ceiling:
        val = eval_exp_poly(seq, n)
        return ZeroStatus("nonzero" if val else "zero", "exact", value=val)
    results = []
    qs = config.witnesses or witness_primes(config.witness_count, config.witness_seed, avoid)
    for q in qs:
        if avoid % q == 0:
            continue
        image = eval_exp_poly_mod(seq, n, q)
        results.append((q, image))
        if any(image):
            return ZeroStatus("nonzero", "witness", witness=q, witness_results=tuple(results))
    return ZeroStatus("too_large", "none", witness_results=tuple(results))


def congruence_gap(seq: ExpPolySequence, ell: int, p: int, k: int, mode: str,
                   pattern=None, modulus: Optional[int] = None) -> FieldElement:
    """The difference that the relevant congruence says lies in pO.

    mode "simple":     v_l^(p^k) - v_(l p^k)
    mode "polynomial": v_l^(p^k) - u_(l p^k)
    mode "inertial":   v_l - u_(l p^(k f(p)))
    mode "sum":        u_(S_p) - v_(S_1) for ``pattern`` = [(l_j, k_j), ...]

    With ``modulus`` the result is reduced coordinatewise modulo it (enough to
    test divisibility by p when p | modulus), which keeps huge indices cheap.
    """
    if not seq.integral_certified:
        raise InvalidArgumentError("congruence_gap needs an integral sequence")
    if not arith.is_prime(p):
        raise InvalidArgumentError(f"{p} is not prime")
    K = seq.field
    v, v_zero = associated_simple(seq)
    if mode in ("simple", "polynomial"):
        if not seq.has_rational_coefficients:
            raise InvalidArgumentError(f"{mode} mode needs rational coefficient polynomials")
        if mode == "simple" and not seq.is_simple:
            raise InvalidArgumentError("simple mode needs a simple sequence")
        if k == 0 and not seq.is_simple:
            raise InvalidArgumentError("k = 0 congruence only holds for simple sequences")
        n = ell * p ** k
        base, exponent = _value(v, v_zero, ell, K, modulus), p ** k
        other = _value(v if mode == "simple" else seq, v_zero and mode == "simple", n, K, modulus)
        left = _power(base, exponent, K, modulus)
        return _finish(left, other, K, modulus)
    if mode not in ("inertial", "sum"):
        raise InvalidArgumentError(f"unknown congruence mode {mode!r}")
    if p in ramified_candidates(K):
        raise InvalidArgumentError(f"{p} may ramify; the {mode} congruence needs p unramified")
    f = splitting_data(K, p).f
    if mode == "inertial":
        if k == 0 and not seq.is_simple:
            raise InvalidArgumentError("k = 0 congruence only holds for simple sequences")
        n = ell * p ** (k * f)
        return _finish(_value(v, v_zero, ell, K, modulus), _value(seq, False, n, K, modulus),
                       K, modulus)
    fam = SumFamily(pattern)
    validate_family(fam)
    if any(kj == 0 for _, kj in fam.pairs) and not seq.is_simple:
        raise InvalidArgumentError("sum congruence with some k_j = 0 only holds for simple sequences")
    return _finish(_value(seq, False, fam.index(p, f), K, modulus),
                   _value(v, v_zero, fam.s1, K, modulus), K, modulus)


def _value(seq, is_zero, n, K, modulus):
    if is_zero or seq is None:
        return K.zero if modulus is None else [0] * K.degree
    if modulus is None:
        return eval_exp_poly(seq, n)
    return _eval_mod(seq, n, modulus)


def _power(base, e, K, modulus):
    if modulus is None:
        return nf_pow(K, base, e)
    return _pow_mod_coords(base, e, K.defining_poly, modulus)


def _finish(a, b, K, modulus):
    if modulus is None:
        return a - b
    return K.element([(x - y) % modulus for x, y in zip(a, b)])


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

def _digits(x: int) -> str:
    try:
        import gmpy2
        return gmpy2.mpz(x).digits()
    except ImportError:  # pragma: no cover
        return str(x)


def summarize_value(val: FieldElement, full_limit: int = 60) -> list:
    """Per-coordinate strings; long integers become 'lead...[digits]' summaries."""
    out = []
    for c in val.coords:
        if c.denominator != 1:
            out.append(str(c))
            continue
        s = _digits(int(c))
        digits = len(s.lstrip("-"))
        if digits <= full_limit:
            out.append(s)
        else:
            sign = "-" if s.startswith("-") else ""
            body = s.lstrip("-")
            out.append(f"{sign}{body[0]}.{body[1:4]}e{digits - 1} ({digits} digits)")
    return out


@dataclass
class Evidence:
    role: str            # "base" | "candidate" | "ramified" | "pattern"
    n: int
    ell: int
    k: int
    p: Optional[int]
    f: Optional[int]
    member: bool         # True when n provably belongs to the family
    status: str          # "zero" | "nonzero" | "too_large"
    method: str          # "exact" | "witness" | "none"
    witness: Optional[int] = None
    value: Optional[list] = None

    def key(self):
        return (self.ell, self.k, self.p or 0, self.f or 0, self.n, self.role)


@dataclass
class DecisionReport:
    family: dict
    outcome: str                 # "zero_found" | "no_zero" | "unresolved"
    zero: Optional[dict] = None
    zeros: list = field(default_factory=list)
    obstructions: list = field(default_factory=list)
    multipliers: list = field(default_factory=list)   # [(l, coords of v_l)]
    norms: dict = field(default_factory=dict)         # l -> N(v_l), the prime bound
    candidates: dict = field(default_factory=dict)    # l -> [primes]
    ramified_handled: list = field(default_factory=list)
    evidence: list = field(default_factory=list)
    scale: dict = field(default_factory=dict)
    short_circuit: bool = False

    def to_dict(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "family": self.family,
            "outcome": self.outcome,
            "zero": self.zero,
            "zeros": self.zeros,
            "obstructions": self.obstructions,
            "short_circuit": self.short_circuit,
            "scale": self.scale,
            "multipliers": [{"ell": l, "value": v} for l, v in self.multipliers],
            "norms": {str(k): str(v) for k, v in self.norms.items()},
            "candidates": {str(k): list(v) for k, v in self.candidates.items()},
            "ramified_handled": self.ramified_handled,
            "evidence": [asdict(e) for e in self.evidence],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _family_dict(family) -> dict:
    if isinstance(family, SumFamily):
        return {"name": family.name, "pairs": [list(p) for p in family.pairs], "c": family.c}
    return {"name": family.name, "c": family.c, "k_min": family.k_min}


def _coords_str(val: FieldElement) -> list:
    return [str(c) for c in val.coords]


# ---------------------------------------------------------------------------
# orchestration
# ---------------------------------------------------------------------------

@dataclass
class _Task:
    role: str
    n: int
    ell: int
    k: int
    p: Optional[int]
    f: Optional[int]
    member: bool
    certified_branch: bool = True   # False when membership hinges on an uncertified f


def _verify_worker(seq, n, config, avoid):
    # Fraction pickles through str(), which refuses very long integers
    st = verify_candidate(seq, n, config, avoid)
    coords = st.value.int_coords() if st.value is not None else None
    return st.kind, st.method, st.witness, coords, st.witness_results


def _verify_many(seq, ns, config, avoid):
    ns = sorted(set(ns))
    if config.workers > 1 and len(ns) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as ex:
            raw = list(ex.map(_verify_worker, [seq] * len(ns), ns,
                              [config] * len(ns), [avoid] * len(ns)))
        statuses = [ZeroStatus(kind, method, witness,
                               seq.field.element(coords) if coords is not None else None, wr)
                    for kind, method, witness, coords, wr in raw]
    else:
        statuses = [verify_candidate(seq, n, config, avoid) for n in ns]
    return dict(zip(ns, statuses))


def decide(seq: ExpPolySequence, family, config: Optional[DecideConfig] = None) -> DecisionReport:
    """Decide whether seq has a zero at an index of ``family``; return a certificate."""
    config = config or DecideConfig()
    validate_family(family)
    K = seq.field
    galois_needed = isinstance(family, (InertialFamily, SumFamily))
    if galois_needed and not K.galois_claimed:
        raise NotGaloisError(f"the {family.name} family needs a field flagged as Galois")
    if not galois_needed and not seq.has_rational_coefficients:
        raise InvalidFamilyError(
            f"the {family.name} family needs rational coefficient polynomials A_i; "
            "use the inertial family for algebraic coefficients")

    w, root_scale, multiplier = scale_to_integral(seq)
    report = DecisionReport(family=_family_dict(family), outcome="unresolved",
                            scale={"root_scale": root_scale, "multiplier": multiplier})
    v, v_zero = associated_simple(w)
    if v_zero:
        # u_0 = v_0 = 0: a zero at the degenerate index n = 0
        report.short_circuit = True
        report.outcome = "zero_found"
        report.zero = {"n": 0, "ell": 0, "k": 0, "p": None, "f": None}
        report.zeros = [report.zero]
        report.evidence.append(Evidence("base", 0, 0, 0, None, None, True, "zero", "exact",
                                        value=["0"] * K.degree))
        return report

    tasks: list = []
    obstructions: list = []
    k_lo = max(1, family.k_min) if not isinstance(family, SumFamily) else 1
    ramified = ()
    if galois_needed:
        try:
            ramified = ramified_candidates(K)
        except PartialFactorizationError as exc:
            obstructions.append(
                f"field discriminant not fully factored (cofactor {exc.cofactor}); "
                "ramified primes unknown")
            ramified = tuple(sorted(set(exc.factors)))

    def bound_primes(label, value):
        try:
            cands = _candidates_for(value, config.factor_effort)
            report.norms[label] = cands.norm
            report.candidates[label] = list(cands.primes)
            return cands.primes
        except PartialFactorizationError as exc:
            report.norms[label] = abs(_integral_norm(value))
            primes = sorted(set(exc.factors))
            report.candidates[label] = primes
            obstructions.append(
                f"norm of the bounding element for l={label} not fully factored; "
                f"cofactor {exc.cofactor} hides unresolved candidate primes")
            return primes

    if isinstance(family, SumFamily):
        _plan_sum(w, family, K, ramified, tasks, obstructions, report, bound_primes)
    else:
        if isinstance(family, PrimePower):
            v1 = eval_exp_poly(v, 1)
            ells = [(1, v1)] if v1 else []
            if family.k_min == 0:
                tasks.append(_Task("base", 1, 1, 0, None, None, True))
            if not v1 and family.c >= k_lo:
                obstructions.append("v_1 = 0: no prime bound for n = p^k, k >= 1 (out of method)")
        else:
            ells = admissible_multipliers(w, family.c).values
            if family.k_min == 0:
                tasks.extend(_Task("base", l, l, 0, None, None, True) for l, _ in ells)
        report.multipliers = [(l, _coords_str(val)) for l, val in ells]
        if family.c >= k_lo:
            for l, val in ells:
                for p in bound_primes(l, val):
                    if galois_needed and p in ramified:
                        continue  # handled exhaustively below
                    f = splitting_data(K, p).f if galois_needed else 1
                    for k in range(k_lo, family.c + 1):
                        tasks.append(_Task("candidate", l * p ** (k * f), l, k, p,
                                           f if galois_needed else None, True))
            if galois_needed:
                for p in ramified:
                    sd = splitting_data(K, p)
                    report.ramified_handled.append(_ramified_entry(sd, K))
                    for l, _ in ells:
                        for k in range(k_lo, family.c + 1):
                            for f in divisors(K.degree):
                                tasks.append(_Task("ramified", l * p ** (k * f), l, k, p, f,
                                                   sd.certified and f == sd.f, sd.certified))

    statuses = _verify_many(w, [t.n for t in tasks], config, root_scale * multiplier)
    _assemble(report, tasks, statuses, obstructions)
    return report


def _ramified_entry(sd, K):
    return {"p": sd.p, "status": sd.status, "e": sd.e, "f": sd.f, "g": sd.g,
            "shape": [list(s) for s in sd.shape],
            "treatment": f"exhaustive over f' | {K.degree}"}


def _plan_sum(w, family, K, ramified, tasks, obstructions, report, bound_primes):
    s1 = family.s1
    if all(k == 0 for _, k in family.pairs):
        tasks.append(_Task("pattern", s1, s1, 0, None, None, True))
        return
    # the index S_p is congruent to s0 mod p; s0 = 0 whenever every k_j >= 1
    s0 = sum(l for l, k in family.pairs if k == 0)
    bound = K.zero
    for lam, A in w.terms:
        bound = bound + _coeff_at(A, s0) * lam ** s1
    report.multipliers = [(s1, _coords_str(bound))]
    if not bound:
        obstructions.append(
            f"v_(S_1) = 0 for S_1 = {s1}: the pattern is outside the method")
        return
    for p in bound_primes(s1, bound):
        if p in ramified:
            continue
        f = splitting_data(K, p).f
        tasks.append(_Task("candidate", family.index(p, f), s1, 1, p, f, True))
    for p in ramified:
        sd = splitting_data(K, p)
        report.ramified_handled.append(_ramified_entry(sd, K))
        for f in divisors(K.degree):
            tasks.append(_Task("ramified", family.index(p, f), s1, 1, p, f,
                               sd.certified and f == sd.f, sd.certified))


def _assemble(report, tasks, statuses, obstructions):
    seen = set()
    evidence = []
    for t in sorted(tasks, key=lambda t: (t.ell, t.k, t.p or 0, t.f or 0, t.n, t.role)):
        key = (t.role, t.n, t.ell, t.k, t.p, t.f)
        if key in seen:
            continue
        seen.add(key)
        st = statuses[t.n]
        value = summarize_value(st.value) if st.value is not None else None
        evidence.append(Evidence(t.role, t.n, t.ell, t.k, t.p, t.f, t.member, st.kind,
                                 st.method, st.witness, value))
        relevant = t.member or not t.certified_branch
        if st.kind == "too_large" and relevant:
            obstructions.append(
                f"n={t.n} (l={t.ell}, k={t.k}, p={t.p}) exceeds the exact ceiling and "
                f"no witness prime certified u_n != 0")
        if st.kind == "zero" and not t.member and not t.certified_branch:
            obstructions.append(
                f"zero found at n={t.n} (p={t.p}, f'={t.f}) but family membership is "
                "uncertified: the inertial degree of p is index-obstructed")
    report.evidence = evidence
    zeros = sorted({(e.n, e.ell, e.k, e.p, e.f) for e in evidence
                    if e.status == "zero" and e.member})
    report.zeros = [{"n": n, "ell": l, "k": k, "p": p, "f": f} for n, l, k, p, f in zeros]
    report.obstructions = list(dict.fromkeys(obstructions))
    if zeros:
        report.outcome = "zero_found"
        report.zero = report.zeros[0]
    elif report.obstructions:
        report.outcome = "unresolved"
    else:
        report.outcome = "no_zero"


def replay_evidence(seq: ExpPolySequence, report: DecisionReport,
                    config: Optional[DecideConfig] = None) -> list:
    """Re-check every evidence record from scratch; return the failing records."""
    config = config or DecideConfig()
    w, root_scale, multiplier = scale_to_integral(seq)
    bad = []
    for e in report.evidence:
        if e.method == "witness":
            ok = any(eval_exp_poly_mod(w, e.n, e.witness))
        elif e.method == "exact":
            val = eval_exp_poly(w, e.n)
            ok = (e.status == "zero") == (not val) and summarize_value(val) == e.value
        else:
            ok = e.status == "too_large"
        if not ok:
            bad.append(e)
    return bad


# ---------------------------------------------------------------------------
# independent brute-force oracle
# ---------------------------------------------------------------------------

_ORACLE_MODULUS = 2**61 - 1


def _oracle_polymulmod(a, b, mu, m=None):
    # schoolbook product followed by long division by the monic modulus
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] += x * y
    d = len(mu) - 1
    for i in range(len(prod) - 1, d - 1, -1):
        c = prod[i]
        if c:
            for j in range(d + 1):
                prod[i - d + j] -= c * mu[j]
    out = (prod + [0] * d)[:d]
    return [x % m for x in out] if m is not None else out


def _oracle_pow(a, n, mu, m=None):
    result = [1] + [0] * (len(mu) - 2)
    while n:
        if n & 1:
            result = _oracle_polymulmod(result, a, mu, m)
        a = _oracle_polymulmod(a, a, mu, m)
        n >>= 1
    return result


def _oracle_f(mu, p):
    import sympy
    x = sympy.Symbol("x")
    _, factors = sympy.Poly(list(reversed(mu)), x, modulus=p).factor_list()
    return math.lcm(*(fac.degree() for fac, _ in factors))


def brute_force_oracle(seq: ExpPolySequence, family, p_max: int, *,
                       budget_bits: int = 2**27):
    """First zero (n, p, l, k) of the family with p <= p_max, scanning n upwards.

    Shares no arithmetic with :func:`decide`: terms are reduced modulo the
    Mersenne prime 2^61 - 1 with separate code, a nonzero residue being an
    exact proof that u_n != 0, and only vanishing residues are confirmed by a
    full exact evaluation.  Returns None when no zero exists in range.
    """
    validate_family(family)
    K = seq.field
    mu = list(K.defining_poly)
    d = K.degree
    terms = [([Fraction(c) for c in lam.coords], [[Fraction(c) for c in a.coords] for a in A])
             for lam, A in seq.terms]
    M = _ORACLE_MODULUS

    def residue(x: Fraction):
        return x.numerator * pow(x.denominator, -1, M) % M

    mod_ok = all(c.denominator % M for lam, A in terms for vec in [lam] + A for c in vec)

    def coeff_at(A, n, mod):
        acc = [0] * d
        for vec in reversed(A):
            if mod:
                acc = [(x * n + residue(c)) % M for x, c in zip(acc, vec)]
            else:
                acc = [x * n + c for x, c in zip(acc, vec)]
        return acc

    def exact(n, constant_only=False):
        total = [Fraction(0)] * d
        for lam, A in terms:
            a = A[0] if constant_only else coeff_at(A, n, False)
            if n and sum(abs(c) for c in lam) > 1:
                bits = n * math.log2(float(sum(abs(c) for c in lam)) + 1)
                if bits > budget_bits:
                    raise ResourceError(f"exact evaluation at n={n} exceeds {budget_bits} bits")
            total = [x + y for x, y in zip(total, _oracle_polymulmod(a, _oracle_pow(lam, n, mu), mu))]
        return total

    def is_zero(n):
        if mod_ok:
            tot = [0] * d
            for lam, A in terms:
                a = coeff_at(A, n, True)
                lp = _oracle_pow([residue(c) for c in lam], n, mu, M)
                tot = [(x + y) % M for x, y in zip(tot, _oracle_polymulmod(a, lp, mu, M))]
            if any(tot):
                return False
        return not any(exact(n))

    if all(not any(A[0]) for _, A in terms):
        return (0, None, 0, 0)

    primes = arith.primes_up_to(p_max)
    indices = []   # (n, p, l, k)
    if isinstance(family, SumFamily):
        s1 = family.s1
        if all(k == 0 for _, k in family.pairs):
            indices.append((s1, None, s1, 0))
        else:
            for p in primes:
                f = _oracle_f(mu, p) if d > 1 else 1
                indices.append((family.index(p, f), p, s1, 1))
    else:
        if isinstance(family, PrimePower):
            ells = [1]
        else:
            ells = [l for l in range(1, family.c + 1) if any(exact(l, constant_only=True))]
        for l in ells:
            if family.k_min == 0:
                indices.append((l, None, l, 0))
            for p in primes:
                f = _oracle_f(mu, p) if isinstance(family, InertialFamily) and d > 1 else 1
                for k in range(max(1, family.k_min), family.c + 1):
                    indices.append((l * p ** (k * f), p, l, k))
    for n, p, l, k in sorted(set(indices), key=lambda t: (t[0], t[2], t[3], t[1] or 0)):
        if is_zero(n):
            return (n, p, l, k)
    return None

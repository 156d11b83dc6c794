"""Executable congruence casework: every step carries a machine-checkable trace.

Each procedure returns a CaseVerdict whose trace records the moduli used and
the residues enumerated, so a verdict can be replayed and compared bit-for-bit
instead of being trusted as a bare boolean.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .equation_model import LNInstance, Solution, is_solution
from .oracle import isqrt, perfect_root

OUTCOME_CONTRADICTION = "contradiction"
OUTCOME_FORCED = "forced"
OUTCOME_REDUCED = "reduced"
OUTCOME_SOLUTIONS = "solutions"


@dataclass(frozen=True)
class CaseVerdict:
    """Outcome of one proof step plus the congruence trace that supports it."""

    outcome: str
    reason: str = ""
    assignments: tuple[tuple[str, int], ...] = ()
    reduced_k: int | None = None
    constraints: tuple[str, ...] = ()
    solutions: tuple[Solution, ...] = ()
    trace: tuple[dict[str, Any], ...] = ()

    @classmethod
    def contradiction(cls, reason: str, trace=()) -> CaseVerdict:
        return cls(OUTCOME_CONTRADICTION, reason=reason, trace=tuple(trace))

    @classmethod
    def forced(cls, assignments, reason: str = "", trace=()) -> CaseVerdict:
        return cls(
            OUTCOME_FORCED,
            reason=reason,
            assignments=tuple(assignments),
            trace=tuple(trace),
        )

    @classmethod
    def reduced(cls, k: int, constraints, trace=()) -> CaseVerdict:
        return cls(
            OUTCOME_REDUCED,
            reduced_k=k,
            constraints=tuple(constraints),
            trace=tuple(trace),
        )

    @classmethod
    def found(cls, solutions, trace=()) -> CaseVerdict:
        return cls(OUTCOME_SOLUTIONS, solutions=tuple(solutions), trace=tuple(trace))

    def to_jsonable(self) -> dict[str, Any]:
        out: dict[str, Any] = {"outcome": self.outcome}
        if self.reason:
            out["reason"] = self.reason
        if self.assignments:
            out["assignments"] = [[k, json_safe(v)] for k, v in self.assignments]
        if self.reduced_k is not None:
            out["reduced_k"] = self.reduced_k
        if self.constraints:
            out["constraints"] = list(self.constraints)
        if self.solutions:
            out["solutions"] = [
                {"x": str(s.x), "y": str(s.y), "n": s.n} for s in self.solutions
            ]
        if self.trace:
            out["trace"] = [
                {k: json_safe(v) for k, v in step.items()} for step in self.trace
            ]
        return out


def json_safe(v: Any) -> Any:
    # decimal strings for integers a JSON consumer could overflow on
    if isinstance(v, bool):
        return v
    if isinstance(v, int) and abs(v) >= 2**53:
        return str(v)
    if isinstance(v, (list, tuple)):
        return [json_safe(x) for x in v]
    return v


@dataclass(frozen=True)
class ValuationSplit:
    """x = 19^s * X, y = 19^t * Y with X, Y positive, odd and coprime to 19."""

    s: int
    t: int
    X: int
    Y: int

    def __post_init__(self) -> None:
        if self.s < 0 or self.t < 0:
            raise ValueError(f"valuations must be non-negative: s={self.s}, t={self.t}")
        if self.X < 1 or self.Y < 1:
            raise ValueError(f"X and Y must be positive: X={self.X}, Y={self.Y}")
        if self.X % 19 == 0 or self.Y % 19 == 0:
            raise ValueError(
                f"19 must not divide X or Y (x not divisible by 19^s exactly): "
                f"X={self.X}, Y={self.Y}"
            )
        if self.X % 2 == 0:
            raise ValueError(f"X must be odd (x is odd), got {self.X}")


def n1_parametric(k: int, t: int) -> Solution:
    """The n = 1 member for parameter t: (2t+1, t^2 + t + (1 + 19^(2k+1))/4, 1)."""
    if k < 0 or t < 0:
        raise ValueError(f"k and t must be non-negative, got k={k}, t={t}")
    D = 19 ** (2 * k + 1)
    sol = Solution(2 * t + 1, t * t + t + (1 + D) // 4, 1)
    assert is_solution(LNInstance(k), *sol.as_tuple())
    return sol


def even_case(k: int, m: int) -> CaseVerdict:
    """n = 2m with 19 not dividing x.

    19^(2k+1) = (2y^m - x)(2y^m + x) and the factors are coprime (a common
    factor 19 would divide x), so 2y^m - x = 1 and 2y^m + x = 19^(2k+1).
    That pins y^m = (19^(2k+1)+1)/4 and x = (19^(2k+1)-1)/2; a solution with
    this n exists iff the pinned value is a perfect m-th power.
    """
    if k < 0 or m < 1:
        raise ValueError(f"need k >= 0 and m >= 1, got k={k}, m={m}")
    D = 19 ** (2 * k + 1)
    x = (D - 1) // 2
    ym = (D + 1) // 4
    root = ym if m == 1 else perfect_root(ym, m)
    trace = (
        {
            "check": "coprime_factor_split",
            "small_factor": 1,
            "large_factor": D,
            "x": x,
            "y_power": ym,
        },
        # subtracting the split equations mod 3 forces x; m odd follows
        {"check": "mod3", "x_mod_3": x % 3, "y_power_mod_3": ym % 3},
        {"check": "perfect_power", "value": ym, "m": m, "root": root},
    )
    if root is None:
        return CaseVerdict.contradiction(
            f"(19^(2k+1)+1)/4 = {ym} is not a perfect {m}-th power", trace
        )
    return CaseVerdict.found([Solution(x, root, 2 * m)], trace)


def mod19_forces_p(k: int, t: int, p: int) -> CaseVerdict:
    """When 19 still divides the reduced left side (t < k), the surviving
    term mod 19 is p*a^(p-1); with 19 coprime to a that forces p = 19."""
    if not 0 <= t < k:
        raise ValueError(f"requires 0 <= t < k, got t={t}, k={k}")
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be an odd prime, got {p}")
    residues = [(p % 19) * pow(a, p - 1, 19) % 19 for a in range(1, 19)]
    trace = (
        {
            "check": "mod19_exhaustive",
            "modulus": 19,
            "term": "p*a^(p-1)",
            "residues": residues,
        },
    )
    if all(r != 0 for r in residues):
        return CaseVerdict.contradiction(
            f"p*a^(p-1) is never 0 mod 19 for a in 1..18, so p = {p} is impossible "
            f"while 19 divides the left side",
            trace,
        )
    return CaseVerdict.forced([("p", 19)], trace=trace)


def mod19_forces_kt(k: int, t: int) -> CaseVerdict:
    """After p = 19 is forced, dividing once by 19 and reading mod 19 again
    pins k - t = 1 (and the positive sign)."""
    if not 0 <= t < k:
        raise ValueError(f"requires 0 <= t < k, got t={t}, k={k}")
    trace = ({"check": "mod19_after_division", "k": k, "t": t, "k_minus_t": k - t},)
    if k - t != 1:
        return CaseVerdict.contradiction(
            f"dividing by 19 forces k - t = 1, but k - t = {k - t}", trace
        )
    return CaseVerdict.forced([("k_minus_t", 1), ("sign", 1)], trace=trace)


def mod_pow2_insoluble(p: int, t: int) -> CaseVerdict:
    """Insolubility of a^2 = 19^(2t) * (2 + 2^(s-1)) mod 2^(s+1) for odd a,
    where p = 3 + 2^s * m with s >= 2 and m odd.  Exhausts all odd residues.

    t is the 19-adic valuation of b; t = 0 is the b = +-1 route, which meets
    the same congruence with the 19^(2t) factor collapsed to 1.
    """
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t}")
    if p <= 3 or p % 4 != 3:
        raise ValueError(f"p must be a prime congruent to 3 mod 4 and > 3, got {p}")
    s = ((p - 3) & -(p - 3)).bit_length() - 1
    m = (p - 3) >> s
    modulus = 1 << (s + 1)
    target = pow(19, 2 * t, modulus) * (2 + (1 << (s - 1))) % modulus
    odd_residues = list(range(1, modulus, 2))
    squares = sorted({a * a % modulus for a in odd_residues})
    solutions = [a for a in odd_residues if a * a % modulus == target]
    trace = (
        {
            "check": "odd_squares_exhaustive",
            "modulus": modulus,
            "s": s,
            "m": m,
            "target": target,
            "odd_residues_checked": len(odd_residues),
            "square_residues": squares,
            "solutions": solutions,
        },
    )
    if not solutions:
        return CaseVerdict.contradiction(
            f"a^2 = {target} (mod {modulus}) has no odd solution "
            f"(odd squares mod {modulus} are {squares})",
            trace,
        )
    return CaseVerdict.forced(
        [(f"a_mod_{modulus}", a) for a in solutions],
        reason="congruence is soluble; no contradiction from this sieve",
        trace=trace,
    )


def p3_case(k: int, search_bound: int = 500) -> CaseVerdict:
    """n = 3 with 19 not dividing x is impossible, shown two independent ways.

    Residue path: 4*19^k = 3a^2 b - 19 b^3 read mod 3 forces b = 2 (mod 3);
    substituting b = 3r + 2 and reading mod 9 leaves a^2 = 2 (mod 3), which
    no square satisfies.  Exhaustive path: no odd |a|, |b| <= search_bound
    satisfy the cubic identity at all.
    """
    if k < 0 or search_bound < 1:
        raise ValueError(f"need k >= 0 and search_bound >= 1, got {k}, {search_bound}")
    target = 4 * 19**k
    # mod 3: RHS = -b^3 = -b, LHS = 1
    b_mod3 = [b for b in range(3) if (3 * b - 19 * b**3) % 3 == target % 3]
    # b = 3r + 2, mod 9: 6a^2 - 8 = 4; dividing the reduced congruence by 3
    # and inverting 2 leaves a^2 = 2 (mod 3)
    squares_mod3 = sorted({a * a % 3 for a in range(3)})
    forced_square = 2 * ((target % 9 + 8) // 3) % 3
    a_mod3 = [a for a in range(3) if (6 * a * a - 8) % 9 == target % 9]
    witnesses = []
    candidates = 0
    for a in range(1, search_bound + 1, 2):  # a enters squared: sign irrelevant
        aa3 = 3 * a * a
        for b_abs in range(1, search_bound + 1, 2):
            for b in (b_abs, -b_abs):
                candidates += 1
                if aa3 * b - 19 * b**3 == target:
                    witnesses.append((a, b))
    trace = (
        {"check": "mod3_forces_b", "lhs_mod_3": target % 3, "b_mod_3": b_mod3},
        {
            "check": "mod9_reduction",
            "lhs_mod_9": target % 9,
            "a_square_forced_mod_3": forced_square,
            "a_mod_3_solutions": a_mod3,
            "squares_mod_3": squares_mod3,
        },
        {
            "check": "exhaustive_search",
            "bound": search_bound,
            "candidates_checked": candidates,
            "witnesses": [list(w) for w in witnesses],
        },
    )
    if witnesses or a_mod3:
        raise RuntimeError(
            f"residue argument and exhaustive search disagree for k={k}: "
            f"witnesses={witnesses}, a_mod3={a_mod3}"
        )
    return CaseVerdict.contradiction(
        "3a^2*b - 19b^3 = 4*19^k forces b = 2 (mod 3) and then a^2 = 2 (mod 3), "
        "which is not a quadratic residue; exhaustive scan found no witness",
        trace,
    )


def valuation_trichotomy(k: int, split: ValuationSplit, n: int) -> CaseVerdict:
    """Case 19 | x: compare min{2s, 2k+1, tn} in
    19^(2s) X^2 + 19^(2k+1) = 4 * 19^(tn) Y^n and close or reduce the instance.

    min = 2k+1 forces tn = 2k+1 and lands on 19*Z^2 + 1 = 4*Y^n (insoluble);
    min = tn needs tn = 2k+1 (same dead end) or 2s = tn; min = 2s forces
    tn = 2s mod 19.  The surviving branches reduce to the instance k - s with
    the constraint tn = 2s recorded.
    """
    if k < 0 or n < 2:
        raise ValueError(f"need k >= 0 and n >= 2, got k={k}, n={n}")
    if split.s < 1:
        raise ValueError(f"19 | x requires s >= 1, got s={split.s}")
    two_s, odd_e, tn = 2 * split.s, 2 * k + 1, split.t * n
    mn = min(two_s, odd_e, tn)
    base = {
        "check": "valuation_minimum",
        "two_s": two_s,
        "two_k_plus_1": odd_e,
        "t_times_n": tn,
        "minimum": mn,
    }
    if mn == odd_e:
        trace = (
            base,
            {
                "check": "mod19_forcing",
                "forced": "t*n == 2k+1",
                "holds": tn == odd_e,
            },
        )
        if tn != odd_e:
            return CaseVerdict.contradiction(
                f"dividing by 19^(2k+1) and reading mod 19 forces t*n = 2k+1, "
                f"but t*n = {tn} and 2k+1 = {odd_e}",
                trace,
            )
        if n % 2 == 0:
            return CaseVerdict.contradiction(
                f"t*n = 2k+1 = {odd_e} is odd, impossible for even n = {n}", trace
            )
        return CaseVerdict.contradiction(
            "reduces to 19*Z^2 + 1 = 4*Y^n, which has no solutions "
            "(bounded scan in no_19z2_solutions; unbounded statement cited)",
            trace,
        )
    if mn == tn:
        trace = (
            base,
            {
                "check": "mod19_forcing",
                "forced": "2s == t*n (or t*n == 2k+1, handled above)",
                "holds": two_s == tn,
            },
        )
        if two_s != tn:
            return CaseVerdict.contradiction(
                f"after dividing by 19^(tn), both remaining terms are divisible "
                f"by 19 while 4*Y^n is not: 2s = {two_s}, t*n = {tn}",
                trace,
            )
        return CaseVerdict.reduced(
            k - split.s,
            (f"t*n == 2*s == {two_s}",),
            trace,
        )
    # mn == two_s, strictly below t*n (parity rules out a tie with 2k+1)
    trace = (
        base,
        {
            "check": "mod19_forcing",
            "forced": "t*n == 2s",
            "holds": tn == two_s,
        },
    )
    return CaseVerdict.reduced(
        k - split.s,
        (f"t*n == 2*s == {two_s}",),
        trace,
    )


def no_19z2_solutions(n_max: int = 20, z_max: int = 10**5) -> CaseVerdict:
    """Bounded verification that 19*Z^2 + 1 = 4*Y^n has no solutions with odd
    Z <= z_max and 3 <= n <= n_max.  The unbounded statement is cited, not
    reproved; this scan guards the reduction that relies on it."""
    if n_max < 3 or z_max < 1:
        raise ValueError(f"need n_max >= 3 and z_max >= 1, got {n_max}, {z_max}")
    limit = 19 * z_max * z_max + 1
    witnesses = []
    checked = 0
    for n in range(3, n_max + 1):
        y = 1
        while True:
            v = 4 * y**n
            if v > limit:
                break
            checked += 1
            m = v - 1
            if m % 19 == 0:
                z2 = m // 19
                z = isqrt(z2)
                if z * z == z2 and z % 2 == 1:
                    witnesses.append((z, y, n))
            y += 1
    trace = (
        {
            "check": "exhaustive_scan",
            "n_min": 3,
            "n_max": n_max,
            "z_max": z_max,
            "candidates_checked": checked,
            "witnesses": [list(w) for w in witnesses],
        },
    )
    if witnesses:
        return CaseVerdict.forced(
            [("witness_count", len(witnesses))],
            reason="scan found witnesses; the cited insolubility would be violated",
            trace=trace,
        )
    return CaseVerdict.contradiction(
        f"19*Z^2 + 1 = 4*Y^n has no solution with odd Z <= {z_max}, "
        f"3 <= n <= {n_max} (unbounded claim cited, not reproved)",
        trace,
    )

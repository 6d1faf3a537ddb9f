"""
Cross Checker
Runs every exhaustive property over a bounded universe and reports counterexamples
"""

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple

import structlog

from core.alphabet import Alphabet
from core.derivatives import (
    derivative_ladder,
    highest_shifted_derivative,
    split_rigid_generic,
)
from core.errors import NotGeneric, SpehKitError
from core.segments import (
    Segment,
    is_sigma_self_dual_segment,
    segment_distinguished,
    segment_eta_distinguished,
)
from core.unitary import (
    ComplementaryFactor,
    SpehFactor,
    UnitaryRep,
    dual_rep,
    is_sigma_self_dual,
    langlands_data,
    self_dual_blocks,
    sigma_rep,
)
from distinction.engine import (
    DistinctionType,
    VerdictCache,
    alternation_trace,
    dichotomy,
    end_of_complementary_series,
    is_distinguished,
    is_distinguished_generic,
    is_sigma_induced,
)
from distinction.inductive import InductiveVerdicts, inductive_checker
from dsl.lowering import print_canonical, read_rep

from .matching import matching_oracle
from .universe import UniverseSpec, enumerate_universe, unitary_segments

logger = structlog.get_logger(__name__)

REPORT_VERSION = 1

# Pair, split and text properties stop here; the verdict properties cover
# the whole universe.
DEFAULT_DETAIL_DEGREE = 8

Check = Optional[str]


# ============================================================================
# REPORT
# ============================================================================

@dataclass
class PropertyResult:
    """Instance count and the first few counterexamples of one property"""
    name: str
    description: str
    instances: int = 0
    failure_count: int = 0
    failures: List[Dict[str, str]] = field(default_factory=list)
    max_failures: int = 5

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def record(self, subject: str, problem: Check) -> None:
        self.instances += 1
        if problem is None:
            return
        self.failure_count += 1
        if len(self.failures) < self.max_failures:
            self.failures.append({"subject": subject, "detail": problem})

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "description": self.description,
            "instances": self.instances,
            "failureCount": self.failure_count,
            "failures": list(self.failures),
        }


@dataclass
class CrossCheckReport:
    spec: UniverseSpec
    properties: List[PropertyResult]
    representations: int = 0
    mutated: bool = False
    detail_degree: int = DEFAULT_DETAIL_DEGREE

    @property
    def success(self) -> bool:
        return all(p.passed for p in self.properties)

    @property
    def counterexamples(self) -> int:
        return sum(p.failure_count for p in self.properties)

    @property
    def detail_max_degree(self) -> int:
        return min(self.detail_degree, self.spec.max_degree)

    def get(self, name: str) -> PropertyResult:
        for result in self.properties:
            if result.name == name:
                return result
        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "version": REPORT_VERSION,
            "spec": self.spec.to_dict(),
            "representations": self.representations,
            "detailMaxDegree": self.detail_max_degree,
            "mutated": self.mutated,
            "properties": [p.to_dict() for p in self.properties],
            "success": self.success,
        }


# ============================================================================
# HELPERS
# ============================================================================

def proper_splits(rep: UnitaryRep) -> Iterator[Tuple[UnitaryRep, UnitaryRep]]:
    """Every unordered split rep = left x right with both sides nontrivial."""
    items = rep.items()
    for choice in itertools.product(*(range(m + 1) for _, m in items)):
        rest = tuple(m - c for (_, m), c in zip(items, choice))
        if not any(choice) or not any(rest) or choice > rest:
            continue
        left = {f: c for (f, _), c in zip(items, choice) if c}
        right = {f: r for (f, _), r in zip(items, rest) if r}
        yield UnitaryRep.from_counts(left), UnitaryRep.from_counts(right)


def _expect(condition: bool, problem: str) -> Check:
    return None if condition else problem


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


# ============================================================================
# CHECKER
# ============================================================================

class CrossChecker:
    """
    Exhaustive property runner.

    The decision engine reads `engine_alphabet`; the reference rules
    (eta-distinction, the inductive checker, the oracles, the segment
    criterion) read the universe's own alphabet. Both are the same unless a
    mutated alphabet is injected.

    VERDICT_PROPERTIES run on every rep through the trace-free verdict
    caches; the other rep and split properties stop at detail_degree.
    """

    VERDICT_PROPERTIES = [
        ("inductive_agreement", "inductive checker agrees with the closed-form criterion"),
        ("self_dual_necessary", "distinguished implies sigma-self-dual"),
    ]
    REP_PROPERTIES = [
        ("trace_agreement", "traced verdicts agree with the trace-free ones"),
        ("uniform_product", "u(D_i,k) product distinguished implies the k = 1 product is"),
        ("derivative_preservation", "rigid reps: sigma-induced iff their derivative is"),
        ("generic_criterion", "generic criterion agrees with the general one"),
        ("derivative_degree", "derivative lowers degree exactly as its factors do"),
        ("ladder_length", "derivative ladder has max k + 1 rungs"),
        ("split_recombination", "rigid x generic recombines to the rep"),
        ("involutions", "dual and sigma are commuting degree-preserving involutions"),
        ("self_dual_oracle", "matching oracle agrees with sigma-self-duality"),
        ("self_dual_blocks", "self-dual block decomposition exists iff sigma-self-dual"),
        ("canonical_form", "canonical form is idempotent and emitted in order"),
        ("langlands_data", "Langlands data is center-ordered and degree-complete"),
        ("round_trip", "parse(print(rep)) lowers back to rep"),
    ]
    SPLIT_PROPERTIES = [
        ("product_closure", "product of distinguished reps is distinguished"),
        ("derivative_product", "derivative of a product is the product of derivatives"),
        ("self_dual_product", "product of sigma-self-dual reps is sigma-self-dual"),
    ]
    SEGMENT_PROPERTIES = [
        ("speh_reduction", "u(D,k) distinguished iff D is"),
        ("end_of_series", "end of complementary series: pi_B distinguished, pi_A not"),
        ("alternation", "D sigma-distinguished iff D_+ is (sigma, eta)-distinguished"),
        ("dichotomy", "self-dual u(D,k): exactly one of sigma / (sigma, eta)"),
    ]

    def __init__(
        self,
        spec: UniverseSpec,
        engine_alphabet: Optional[Alphabet] = None,
        max_failures: int = 5,
        detail_degree: Optional[int] = None,
    ):
        self.spec = spec
        self.reference = spec.alphabet
        self.engine = engine_alphabet if engine_alphabet is not None else spec.alphabet
        self.mutated = engine_alphabet is not None
        self.detail_degree = DEFAULT_DETAIL_DEGREE if detail_degree is None else detail_degree
        self.results: Dict[str, PropertyResult] = {
            name: PropertyResult(name, description, max_failures=max_failures)
            for name, description in (
                self.VERDICT_PROPERTIES
                + self.REP_PROPERTIES
                + self.SPLIT_PROPERTIES
                + self.SEGMENT_PROPERTIES
            )
        }
        self._engine_verdicts = VerdictCache(self.engine)
        self._reference_verdicts = VerdictCache(self.reference)
        self._inductive = InductiveVerdicts(self.reference)
        self._derivatives: Dict[UnitaryRep, UnitaryRep] = {}
        self._previous: Optional[UnitaryRep] = None

    # ------------------------------------------------------------------
    # Cached engine calls
    # ------------------------------------------------------------------

    def distinguished(self, rep: UnitaryRep) -> bool:
        return self._engine_verdicts.is_distinguished(rep)

    def derivative(self, rep: UnitaryRep) -> UnitaryRep:
        lowered = self._derivatives.get(rep)
        if lowered is None:
            lowered = highest_shifted_derivative(rep)
            self._derivatives[rep] = lowered
        return lowered

    def _run(self, name: str, subject: Callable[[], str], check: Callable[[], Check]) -> None:
        """Subjects are rendered only for failures."""
        try:
            problem = check()
        except SpehKitError as e:
            problem = f"raised {e.__class__.__name__}: {e}"
        self.results[name].record(subject() if problem is not None else "", problem)

    # ------------------------------------------------------------------
    # Whole-universe verdict properties
    # ------------------------------------------------------------------

    def _inductive_agreement(self, rep: UnitaryRep) -> Check:
        inductive = self._inductive.verdict(rep)
        engine = self.distinguished(rep)
        return _expect(inductive == engine, f"inductive={_yes(inductive)}, engine={_yes(engine)}")

    def _self_dual_necessary(self, rep: UnitaryRep) -> Check:
        return _expect(
            not self.distinguished(rep) or self._reference_verdicts.is_sigma_self_dual(rep),
            "distinguished but not sigma-self-dual",
        )

    # ------------------------------------------------------------------
    # Per-representation properties
    # ------------------------------------------------------------------

    def _trace_agreement(self, rep: UnitaryRep) -> Check:
        traced = is_distinguished(rep, self.engine)[0]
        if traced != self.distinguished(rep):
            return f"traced engine={_yes(traced)}, trace-free={_yes(not traced)}"
        traced = inductive_checker(rep, self.reference)[0]
        return _expect(
            traced == self._inductive.verdict(rep),
            f"traced inductive={_yes(traced)}, trace-free={_yes(not traced)}",
        )

    def _uniform_product(self, rep: UnitaryRep) -> Check:
        factors = rep.distinct()
        if not factors or any(isinstance(f, ComplementaryFactor) for f in factors):
            return None
        if len({f.k for f in factors}) != 1 or not self.distinguished(rep):
            return None
        flattened = UnitaryRep.from_counts({f.with_k(1): m for f, m in rep.items()})
        return _expect(
            self.distinguished(flattened),
            f"{flattened.to_text()} is not distinguished",
        )

    def _derivative_preservation(self, rep: UnitaryRep) -> Check:
        if rep.is_trivial or any(f.k < 2 for f in rep.distinct()):
            return None
        here = is_sigma_induced(rep, self.engine)[0]
        lowered = is_sigma_induced(self.derivative(rep), self.engine)[0]
        return _expect(here == lowered, f"rep={_yes(here)}, derivative={_yes(lowered)}")

    def _generic_criterion(self, rep: UnitaryRep) -> Check:
        if not rep.is_generic:
            try:
                is_distinguished_generic(rep, self.engine)
            except NotGeneric:
                return None
            return "NotGeneric was not raised"
        generic = is_distinguished_generic(rep, self.engine)[0]
        return _expect(generic == self.distinguished(rep), f"generic={_yes(generic)}")

    def _derivative_degree(self, rep: UnitaryRep) -> Check:
        lowered = self.derivative(rep)
        expected = rep.degree - sum(m * f.degree // f.k for f, m in rep.items())
        if lowered.degree != expected:
            return f"degree {lowered.degree}, expected {expected}"
        if not rep.is_trivial and lowered.degree >= rep.degree:
            return "degree did not decrease"
        return _expect(lowered.is_trivial == rep.is_generic, "trivial derivative iff generic fails")

    def _ladder_length(self, rep: UnitaryRep) -> Check:
        ladder = derivative_ladder(rep)
        return _expect(
            len(ladder) == rep.max_k + 1 and ladder[-1].is_trivial,
            f"ladder has {len(ladder)} rungs, max k is {rep.max_k}",
        )

    def _split_recombination(self, rep: UnitaryRep) -> Check:
        rigid, generic = split_rigid_generic(rep)
        if rigid * generic != rep:
            return f"{rigid.to_text()} x {generic.to_text()} differs"
        if set(rigid.distinct()) & set(generic.distinct()):
            return "parts share a factor"
        return _expect(
            all(f.k >= 2 for f in rigid.distinct()) and generic.is_generic,
            "parts are not rigid / generic",
        )

    def _involutions(self, rep: UnitaryRep) -> Check:
        alphabet = self.reference
        dual = dual_rep(rep, alphabet)
        sigma = sigma_rep(rep, alphabet)
        if dual_rep(dual, alphabet) != rep:
            return "dual is not an involution"
        if sigma_rep(sigma, alphabet) != rep:
            return "sigma is not an involution"
        if dual_rep(sigma, alphabet) != sigma_rep(dual, alphabet):
            return "dual and sigma do not commute"
        return _expect(dual.degree == sigma.degree == rep.degree, "degree changed")

    def _self_dual_oracle(self, rep: UnitaryRep) -> Check:
        oracle = matching_oracle(rep, self.reference)
        direct = is_sigma_self_dual(rep, self.reference)
        return _expect(oracle == direct, f"matching={_yes(oracle)}, direct={_yes(direct)}")

    def _self_dual_blocks(self, rep: UnitaryRep) -> Check:
        blocks = self_dual_blocks(rep, self.reference)
        if blocks is None:
            return _expect(not is_sigma_self_dual(rep, self.reference), "no blocks for a self-dual rep")
        covered = sum(a.degree + b.degree for a, b in blocks.pairs)
        covered += sum(f.degree for f in blocks.odd_factors)
        if covered != rep.degree:
            return f"blocks cover degree {covered} of {rep.degree}"
        return _expect(
            all(rep.multiplicity(f) % 2 == 1 for f in blocks.odd_factors),
            "odd block with even multiplicity",
        )

    def _canonical_form(self, rep: UnitaryRep) -> Check:
        if UnitaryRep(reversed(list(rep))) != rep:
            return "re-canonicalization changed the rep"
        keys = [f.sort_key() for f in rep.distinct()]
        if any(a >= b for a, b in zip(keys, keys[1:])):
            return "stored factors are not strictly increasing"
        previous, self._previous = self._previous, rep
        if previous is not None and previous.sort_key() >= rep.sort_key():
            return f"emitted after {previous.to_text()}"
        return None

    def _langlands_data(self, rep: UnitaryRep) -> Check:
        data = langlands_data(rep)
        centers = [s.center for s in data]
        if any(a < b for a, b in zip(centers, centers[1:])):
            return "centers are not non-increasing"
        return _expect(
            sum(s.degree for s in data) == rep.degree,
            "segments do not account for the degree",
        )

    def _round_trip(self, rep: UnitaryRep) -> Check:
        text = print_canonical(rep)
        back = read_rep(text, self.reference)
        return _expect(back == rep, f"{text!r} lowers to {back.to_text()}")

    # ------------------------------------------------------------------
    # Split properties
    # ------------------------------------------------------------------

    def _product_closure(self, rep: UnitaryRep, left: UnitaryRep, right: UnitaryRep) -> Check:
        if not (self.distinguished(left) and self.distinguished(right)):
            return None
        return _expect(self.distinguished(rep), "factors distinguished, product not")

    def _derivative_product(self, rep: UnitaryRep, left: UnitaryRep, right: UnitaryRep) -> Check:
        combined = self.derivative(left) * self.derivative(right)
        return _expect(
            self.derivative(rep) == combined,
            f"{self.derivative(rep).to_text()} != {combined.to_text()}",
        )

    def _self_dual_product(self, rep: UnitaryRep, left: UnitaryRep, right: UnitaryRep) -> Check:
        alphabet = self.reference
        if not (is_sigma_self_dual(left, alphabet) and is_sigma_self_dual(right, alphabet)):
            return None
        return _expect(is_sigma_self_dual(rep, alphabet), "factors self-dual, product not")

    # ------------------------------------------------------------------
    # Segment properties
    # ------------------------------------------------------------------

    def _speh_reduction(self, delta: Segment, k: int) -> Check:
        rep = UnitaryRep([SpehFactor(delta, k)])
        engine = self.distinguished(rep)
        segment = segment_distinguished(delta, self.reference)
        return _expect(engine == segment, f"u={_yes(engine)}, segment={_yes(segment)}")

    def _end_of_series(self, delta: Segment, k: int) -> Check:
        pi_a, pi_b = end_of_complementary_series(delta, k, self.reference)
        size = 2 * k * delta.degree
        if pi_a.degree != size or pi_b.degree != size:
            return f"degrees {pi_a.degree}, {pi_b.degree}, expected {size}"
        if not self.distinguished(pi_b):
            return f"{pi_b.to_text()} is not distinguished"
        return _expect(not self.distinguished(pi_a), f"{pi_a.to_text()} is distinguished")

    def _alternation(self, delta: Segment) -> Check:
        trace = alternation_trace(delta, self.engine, reference=self.reference)
        lower, upper = trace.children
        return _expect(
            trace.verdict,
            f"sigma={_yes(lower.verdict)}, eta on D_+={_yes(upper.verdict)}",
        )

    def _dichotomy(self, delta: Segment, k: int) -> Check:
        sigma = segment_distinguished(delta, self.engine)
        eta = segment_eta_distinguished(delta, self.engine)
        if sigma == eta:
            return f"sigma={_yes(sigma)}, eta={_yes(eta)}"
        kind = dichotomy(SpehFactor(delta, k), self.engine)
        verdict = self.distinguished(UnitaryRep([SpehFactor(delta, k)]))
        return _expect(
            (kind is DistinctionType.SIGMA) == verdict,
            f"dichotomy says {kind.value}, engine says {_yes(verdict)}",
        )

    # ------------------------------------------------------------------
    # Driver
    # ------------------------------------------------------------------

    def _check_rep(self, rep: UnitaryRep) -> None:
        subject = rep.to_text
        self._run("inductive_agreement", subject, lambda: self._inductive_agreement(rep))
        self._run("self_dual_necessary", subject, lambda: self._self_dual_necessary(rep))
        if rep.degree > self.detail_degree:
            return
        for name, _ in self.REP_PROPERTIES:
            method = getattr(self, f"_{name}")
            self._run(name, subject, lambda: method(rep))
        for left, right in proper_splits(rep):
            def pair() -> str:
                return f"{left.to_text()} | {right.to_text()}"

            for name, _ in self.SPLIT_PROPERTIES:
                method = getattr(self, f"_{name}")
                self._run(name, pair, lambda: method(rep, left, right))

    def _check_segments(self) -> None:
        spec = self.spec
        for delta in unitary_segments(spec):
            subject = delta.to_text()
            self._run("alternation", lambda: subject, lambda: self._alternation(delta))
            self_dual = is_sigma_self_dual_segment(delta, self.reference)
            for k in range(1, spec.max_k + 1):
                if delta.degree * k > spec.max_degree:
                    break
                label = f"u({subject},{k})"
                self._run("speh_reduction", lambda: label, lambda: self._speh_reduction(delta, k))
                if self_dual:
                    self._run("dichotomy", lambda: label, lambda: self._dichotomy(delta, k))
            if not segment_distinguished(delta, self.reference):
                continue
            if delta.degree > max(1, spec.max_degree // 3):
                continue
            for k in range(2, spec.max_k + 1):
                self._run(
                    "end_of_series",
                    lambda: f"pi(u({subject},{k}),1/2)",
                    lambda: self._end_of_series(delta, k),
                )

    def run(self) -> CrossCheckReport:
        logger.info(
            "crosscheck.start",
            mutated=self.mutated,
            detail_degree=self.detail_degree,
            **self.spec.to_dict(),
        )
        count = 0
        for rep in enumerate_universe(self.spec):
            count += 1
            self._check_rep(rep)
            if count % 100_000 == 0:
                logger.debug("crosscheck.progress", representations=count)
        self._check_segments()

        report = CrossCheckReport(
            spec=self.spec,
            properties=list(self.results.values()),
            representations=count,
            mutated=self.mutated,
            detail_degree=self.detail_degree,
        )
        for result in report.properties:
            logger.info(
                "crosscheck.property",
                name=result.name,
                instances=result.instances,
                failures=result.failure_count,
            )
        logger.info(
            "crosscheck.done",
            representations=count,
            counterexamples=report.counterexamples,
            success=report.success,
        )
        return report


def cross_check(
    spec: UniverseSpec,
    engine_alphabet: Optional[Alphabet] = None,
    max_failures: int = 5,
    detail_degree: Optional[int] = None,
) -> CrossCheckReport:
    """
    Run every exhaustive property over enumerate(spec).

    detail_degree (default DEFAULT_DETAIL_DEGREE) bounds the reps that get
    the pair, split and text properties.
    """
    return CrossChecker(spec, engine_alphabet, max_failures, detail_degree).run()

"""
Data Transfer Objects (DTOs) for command output and input files.

Field order is the serialization order, so json-lines output is canonical.
Rationals travel as strings ("7", "-3/2").
"""
from __future__ import annotations

from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..codes import EnumeratorTable
from ..constants import (
    DEFAULT_CORPUS_SIZE,
    DEFAULT_GREENE_POINTS,
    DEFAULT_LEMMA_TRIPLES,
    DEFAULT_MAX_N,
    DEFAULT_MAX_WORDS,
    DEFAULT_ORACLE_MATROIDS,
    DEFAULT_SEED,
)
from ..core.config import Settings
from ..enums.system import LogLevel, OutputFormat
from ..harmonic.functions import HarmonicFunction, SetFunction
from ..poly import BivariatePoly
from ..utils.helpers import parse_rational, rational_to_str
from ..verify.corpus import CorpusOptions, SelftestSummary
from ..verify.designs import DesignReport
from ..verify.report import Instance, VerificationReport


class BaseDTO(BaseModel):
    """Base class for all DTOs with common configuration."""
    model_config = ConfigDict(from_attributes=True, validate_assignment=True)


# Run configuration

class RunConfig(BaseDTO):
    """Options of one CLI invocation after merging flags, environment and defaults."""
    output_format: OutputFormat = Field(default=OutputFormat.HUMAN)
    seed: int = Field(default=DEFAULT_SEED, ge=0)
    max_n: int = Field(default=DEFAULT_MAX_N, gt=0, description="Largest n for 2^n subset sums")
    max_words: int = Field(default=DEFAULT_MAX_WORDS, gt=0, description="Largest q^k for codeword enumeration")
    log_level: LogLevel = Field(default=LogLevel.WARNING)
    log_json: bool = False
    corpus_size: int = Field(default=DEFAULT_CORPUS_SIZE, gt=0)
    lemma_triples: int = Field(default=DEFAULT_LEMMA_TRIPLES, gt=0)
    greene_points: int = Field(default=DEFAULT_GREENE_POINTS, gt=0)
    oracle_matroids: int = Field(default=DEFAULT_ORACLE_MATROIDS, gt=0)

    @classmethod
    def from_settings(cls, settings: Settings, **overrides: Any) -> RunConfig:
        """Flags win over settings; a flag left at None keeps the settings value."""
        values = settings.model_dump()
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls.model_validate(values)

    @property
    def corpus(self) -> CorpusOptions:
        return CorpusOptions(
            corpus_size=self.corpus_size,
            lemma_triples=self.lemma_triples,
            greene_points=self.greene_points,
            oracle_matroids=self.oracle_matroids,
            max_n=self.max_n,
            max_words=self.max_words,
        )


# Polynomials

class TermDTO(BaseDTO):
    x: int
    y: int
    coeff: str


class PolynomialDTO(BaseDTO):
    terms: list[TermDTO]
    text: str

    @classmethod
    def from_poly(cls, p: BivariatePoly) -> PolynomialDTO:
        return cls(terms=[TermDTO(x=a, y=b, coeff=rational_to_str(c)) for a, b, c in p], text=str(p))


class PolynomialRecordDTO(BaseDTO):
    """One computed polynomial, labelled with the command that produced it."""
    quantity: str
    q: int
    n: int
    k: int
    d: Optional[int] = None
    polynomial: PolynomialDTO


# Harmonic functions (also the input file format)

class HarmonicEntryDTO(BaseDTO):
    subset: list[int]
    value: str

    @field_validator("value", mode="before")
    @classmethod
    def validate_value(cls, v: Any) -> str:
        if isinstance(v, bool) or not isinstance(v, (str, int)):
            raise ValueError("value must be a rational string such as \"-3/2\" or an integer")
        try:
            return rational_to_str(parse_rational(v))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {v!r}") from exc


class HarmonicFunctionDTO(BaseDTO):
    n: int = Field(ge=0)
    d: int = Field(ge=0)
    entries: list[HarmonicEntryDTO] = Field(default_factory=list)

    @classmethod
    def from_function(cls, f: SetFunction) -> HarmonicFunctionDTO:
        return cls(
            n=f.n,
            d=f.d,
            entries=[HarmonicEntryDTO(subset=list(z), value=rational_to_str(v)) for z, v in f.values.items()],
        )

    def to_function(self) -> HarmonicFunction:
        """Raises ``NotHarmonicError`` naming the violated gamma row."""
        values: dict[tuple[int, ...], Any] = {}
        for entry in self.entries:
            key = tuple(sorted(entry.subset))
            values[key] = values.get(key, 0) + parse_rational(entry.value)
        return HarmonicFunction(self.n, self.d, values)


class BasisDTO(BaseDTO):
    n: int
    d: int
    dimension: int
    basis: list[HarmonicFunctionDTO]


# Codes

class GeneratorDTO(BaseDTO):
    q: int
    n: int
    k: int
    generator: list[list[int]]


class EnumeratorTableDTO(BaseDTO):
    """A_i, A_{i,f} and B_{t,f}, indexed by position."""
    n: int
    d: int
    a: list[int]
    a_f: list[str]
    b_f: list[str]

    @classmethod
    def from_table(cls, table: EnumeratorTable) -> EnumeratorTableDTO:
        span = range(table.n + 1)
        return cls(
            n=table.n,
            d=table.d,
            a=[table.a.get(i, 0) for i in span],
            a_f=[rational_to_str(table.a_f.get(i, 0)) for i in span],
            b_f=[rational_to_str(table.b_f.get(t, 0)) for t in span],
        )


# Verification

class InstanceDTO(BaseDTO):
    q: Optional[int] = None
    generator: Optional[list[list[int]]] = None
    function: Optional[HarmonicFunctionDTO] = None
    subset: Optional[list[int]] = None
    extra: dict[str, Any] = Field(default_factory=dict)

    @classmethod
    def from_instance(cls, instance: Instance) -> InstanceDTO:
        m = instance.matrix
        return cls(
            q=m.q if m is not None else None,
            generator=m.to_rows() if m is not None else None,
            function=HarmonicFunctionDTO.from_function(instance.function) if instance.function is not None else None,
            subset=list(instance.subset) if instance.subset is not None else None,
            extra=dict(instance.extra),
        )


class VerificationRecordDTO(BaseDTO):
    identity: str
    verdict: str
    instance: InstanceDTO
    lhs: PolynomialDTO
    rhs: PolynomialDTO
    diff: PolynomialDTO

    @classmethod
    def from_report(cls, report: VerificationReport) -> VerificationRecordDTO:
        return cls(
            identity=report.identity.value,
            verdict=report.verdict.value,
            instance=InstanceDTO.from_instance(report.instance),
            lhs=PolynomialDTO.from_poly(report.lhs),
            rhs=PolynomialDTO.from_poly(report.rhs),
            diff=PolynomialDTO.from_poly(report.diff),
        )


class DegreeResultDTO(BaseDTO):
    d: int
    basis_size: int
    vanishes: bool
    witness: Optional[HarmonicFunctionDTO] = None
    witness_enumerator: Optional[PolynomialDTO] = None


class WeightResultDTO(BaseDTO):
    weight: int
    blocks: int
    harmonic: bool
    oracle: bool
    lam: Optional[int] = None


class DesignReportDTO(BaseDTO):
    n: int
    t: int
    harmonic_design: bool
    oracle_design: bool
    agree: bool
    matroid_vanishes: Optional[bool] = None
    implication_holds: Optional[bool] = None
    degrees: list[DegreeResultDTO]
    weights: list[WeightResultDTO]

    @classmethod
    def from_report(cls, report: DesignReport) -> DesignReportDTO:
        return cls(
            n=report.n,
            t=report.t,
            harmonic_design=report.harmonic_design,
            oracle_design=report.oracle_design,
            agree=report.agree,
            matroid_vanishes=report.matroid_vanishes,
            implication_holds=report.implication_holds,
            degrees=[
                DegreeResultDTO(
                    d=r.d,
                    basis_size=r.basis_size,
                    vanishes=r.vanishes,
                    witness=HarmonicFunctionDTO.from_function(r.witness) if r.witness is not None else None,
                    witness_enumerator=PolynomialDTO.from_poly(r.witness_enumerator) if r.witness_enumerator is not None else None,
                )
                for r in report.degrees
            ],
            weights=[
                WeightResultDTO(weight=w.weight, blocks=w.blocks, harmonic=w.harmonic, oracle=w.oracle, lam=w.lam)
                for w in report.weights
            ],
        )


class IdentitySummaryDTO(BaseDTO):
    identity: str
    checked: int
    failed: int


class SelftestSummaryDTO(BaseDTO):
    seed: int
    ok: bool
    checked: int
    identities: list[IdentitySummaryDTO]
    failures: list[VerificationRecordDTO] = Field(default_factory=list)

    @classmethod
    def from_summary(cls, summary: SelftestSummary) -> SelftestSummaryDTO:
        return cls(
            seed=summary.seed,
            ok=summary.ok,
            checked=summary.checked,
            identities=[
                IdentitySummaryDTO(identity=r.identity.value, checked=r.checked, failed=len(r.failures))
                for r in summary.results
            ],
            failures=[VerificationRecordDTO.from_report(rep) for r in summary.results for rep in r.failures],
        )

"""
formats.py

JSON file models for polynomial systems and certificates.

System file:
  {"variables": [{"name", "role"}], "polys": [[{"coeff": "p/q", "mono": {"var": exp}}]],
   "tags": [{"role", "items"}], "cardinality_index", "m", "kind", "problem", "params"}
Certificate file:
  {"degree", "betas": [[term, ...]], "system_hash", "report": [{"degree", "rows", "cols",
   "status", "millis"}]}

Output is dumped with sorted keys so identical inputs give identical bytes.
"""

import hashlib
import json
from fractions import Fraction
from typing import Any, Dict, List, Literal, Optional, Type, TypeVar

from pydantic import BaseModel, ValidationError, field_validator

from errors import FormatError
from poly import Polynomial, VariableTable, format_rational

Model = TypeVar("Model", bound=BaseModel)


class TermModel(BaseModel):
    coeff: str
    mono: Dict[str, int] = {}

    @field_validator("coeff")
    @classmethod
    def _rational(cls, value: str) -> str:
        try:
            Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not a rational: {value!r}")
        return value

    @field_validator("mono")
    @classmethod
    def _positive(cls, value: Dict[str, int]) -> Dict[str, int]:
        if any(exp < 1 for exp in value.values()):
            raise ValueError("exponents must be positive")
        return value


class VariableModel(BaseModel):
    name: str
    role: Literal["indicator", "auxiliary"]


class TagModel(BaseModel):
    role: str
    items: List[int] = []


class SystemFile(BaseModel):
    problem: str
    kind: str
    variables: List[VariableModel]
    polys: List[List[TermModel]]
    tags: List[TagModel] = []
    cardinality_index: Optional[int] = None
    m: Optional[int] = None
    params: Dict[str, Any] = {}


class DegreeRecordModel(BaseModel):
    degree: int
    rows: int
    cols: int
    status: str
    millis: int = 0


class CertificateFile(BaseModel):
    degree: int
    betas: List[List[TermModel]]
    system_hash: Optional[str] = None
    report: List[DegreeRecordModel] = []


# ---- polynomial <-> terms ----

def polynomial_to_terms(p: Polynomial) -> List[TermModel]:
    names = p.table.names
    return [
        TermModel(coeff=format_rational(coeff), mono={names[var]: exp for var, exp in mono})
        for mono, coeff in p.items()
    ]


def terms_to_polynomial(terms: List[TermModel], table: VariableTable) -> Polynomial:
    collected: Dict[tuple, Fraction] = {}
    for term in terms:
        try:
            mono = tuple(sorted((table.index(name), exp) for name, exp in term.mono.items()))
        except Exception as e:
            raise FormatError(str(e)) from e
        collected[mono] = collected.get(mono, 0) + Fraction(term.coeff)
    return Polynomial(table, collected)


# ---- io ----

def dump_model(model: BaseModel) -> str:
    return json.dumps(model.model_dump(mode="json"), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def load_model(cls: Type[Model], text: str) -> Model:
    try:
        return cls.model_validate(json.loads(text))
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON: {e}") from e
    except ValidationError as e:
        raise FormatError(f"invalid {cls.__name__}: {e}") from e


def read_model(cls: Type[Model], path: str) -> Model:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return load_model(cls, fh.read())
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e}") from e


def write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def content_hash(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()

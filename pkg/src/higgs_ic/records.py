"""Job identities, result records, rendering, and the on-disk cache.

A JobKey pins everything that determines an output (group, parameters,
execution mode, truncation order, schema version); equal keys produce
byte-identical rendered outputs.  Coefficients are serialized as decimal
strings because high-rank values overflow machine integers and the format
must stay lossless and language-neutral.

Cache files are content-addressed by the key digest, carry an embedded
checksum line, and are written atomically; a corrupt or truncated file is
treated as a miss.  The cache only ever accelerates: failures to read or
write are reported as warnings and never change results.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from dataclasses import asdict, dataclass

log = logging.getLogger("higgs_ic")

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class JobKey:
    group: str
    n: int | None = None
    g: int | None = None
    l: int | None = None
    mode: str | None = None
    order: int | None = None
    schema: int = SCHEMA_VERSION

    def canonical(self) -> str:
        return "|".join([
            f"schema={self.schema}", f"group={self.group}", f"n={self.n}",
            f"g={self.g}", f"l={self.l}", f"mode={self.mode}", f"order={self.order}",
        ])

    def digest(self) -> str:
        return hashlib.sha256(self.canonical().encode()).hexdigest()[:32]


@dataclass
class ResultRecord:
    key: JobKey
    variable: object              # "t" or ["u", "v"]
    terms: list                   # [[exponents...], "coefficient"] ascending
    provenance: str
    wall_time_ms: int = 0

    def payload(self) -> dict:
        d = asdict(self)
        d["key"] = asdict(self.key)
        return d

    @classmethod
    def from_payload(cls, d: dict) -> "ResultRecord":
        key = JobKey(**d["key"])
        return cls(key=key, variable=d["variable"],
                   terms=[[list(e), str(c)] for e, c in d["terms"]],
                   provenance=d["provenance"], wall_time_ms=d.get("wall_time_ms", 0))

    def serialize(self) -> str:
        body = json.dumps(self.payload(), sort_keys=True, separators=(",", ":"))
        check = hashlib.sha256(body.encode()).hexdigest()
        return f"sha256:{check}\n{body}\n"

    @classmethod
    def parse(cls, text: str) -> "ResultRecord":
        head, _, body = text.partition("\n")
        body = body.rstrip("\n")
        if not head.startswith("sha256:"):
            raise ValueError("missing checksum line")
        if hashlib.sha256(body.encode()).hexdigest() != head[len("sha256:"):]:
            raise ValueError("checksum mismatch")
        payload = json.loads(body)
        if payload.get("key", {}).get("schema") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema {payload.get('key', {}).get('schema')}")
        return cls.from_payload(payload)


def record_from_polynomial(poly, key: JobKey, wall_time_ms: int = 0) -> ResultRecord:
    """Build a record from a PoincarePolynomial or HodgePolynomial."""
    if hasattr(poly, "degree_label"):  # Poincare: exponents are single integers
        terms = [[[e], str(c)] for e, c in poly.terms()]
        variable = "t"
    else:
        terms = [[[i, j], str(c)] for (i, j), c in poly.terms()]
        variable = ["u", "v"]
    return ResultRecord(key=key, variable=variable, terms=terms,
                        provenance=poly.provenance if hasattr(poly, "provenance") else "closed-formula",
                        wall_time_ms=wall_time_ms)


class ResultCache:
    """Content-addressed store of ResultRecords under one directory."""

    def __init__(self, directory: str):
        self.directory = directory

    def _path(self, key: JobKey) -> str:
        return os.path.join(self.directory, key.digest() + ".rec")

    def get(self, key: JobKey) -> ResultRecord | None:
        path = self._path(key)
        try:
            with open(path, "r", encoding="utf-8") as fh:
                record = ResultRecord.parse(fh.read())
        except FileNotFoundError:
            return None
        except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
            log.warning("ignoring unreadable cache entry %s: %s", path, exc)
            return None
        if record.key != key:
            log.warning("cache digest collision at %s; ignoring", path)
            return None
        return record

    def put(self, key: JobKey, record: ResultRecord) -> None:
        try:
            os.makedirs(self.directory, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
            try:
                with os.fdopen(fd, "w", encoding="utf-8") as fh:
                    fh.write(record.serialize())
                os.replace(tmp, self._path(key))
            finally:
                if os.path.exists(tmp):
                    os.unlink(tmp)
        except OSError as exc:
            log.warning("cache write failed for %s: %s", key.canonical(), exc)


# -- rendering ---------------------------------------------------------------


def _var_names(variable) -> list[str]:
    return [variable] if isinstance(variable, str) else list(variable)

def _term_text(exps, coeff: str, names: list[str], latex: bool) -> str:
    mono = []
    for name, e in zip(names, exps):
        if e == 0:
            continue
        if e == 1:
            mono.append(name)
        elif latex:
            mono.append(f"{name}^{{{e}}}")
        else:
            mono.append(f"{name}^{e}")
    body = " ".join(mono)
    mag = coeff.lstrip("-")
    if not body:
        return mag
    if mag == "1":
        return body
    return f"{mag} {body}"


def render_terms(record: ResultRecord, latex: bool = False) -> str:
    """Readable rendering: ascending exponents, interleaved signs."""
    names = _var_names(record.variable)
    if not record.terms:
        return "0"
    out = []
    for exps, coeff in record.terms:
        text = _term_text(exps, coeff, names, latex)
        if not out:
            out.append(text if not coeff.startswith("-") else f"-{text}")
        else:
            out.append(f"- {text}" if coeff.startswith("-") else f"+ {text}")
    return " ".join(out)


def render_json(record: ResultRecord) -> str:
    doc = {
        "schema": SCHEMA_VERSION,
        "group": record.key.group,
        "params": {"n": record.key.n, "g": record.key.g, "l": record.key.l},
        "variable": record.variable,
        "terms": record.terms,
        "provenance": record.provenance,
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ": "), indent=1)


def render(record: ResultRecord, fmt: str) -> str:
    if fmt == "plain":
        return render_terms(record, latex=False)
    if fmt == "latex":
        return render_terms(record, latex=True)
    if fmt == "json":
        return render_json(record)
    raise ValueError(f"unknown format {fmt!r}")

"""The evidence document format: one frame plus named BBAs, as JSON text.

A document is a JSON object with exactly two top-level keys::

    {
      "frame": ["Poor", "Low", "Middle", "High", "Perfect"],
      "bbas": {
        "m1": [{"set": ["Poor"], "mass": 1.0}],
        "m2": [{"set": [2, 3], "mass": 0.6}, {"set": [1], "mass": 0.4}]
      }
    }

``frame`` is the ordered list of grade labels. Each BBA is a list of
entries whose ``set`` holds grade labels (strings) and/or 1-based
positions (integers) and whose ``mass`` is a nonnegative number. Entries
naming the same set merge by summing. See docs/document_format.md for the
full grammar and annotated examples.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .core import Bba, Frame, build_bba, build_frame
from .errors import DocumentError, ValidationError


def _require_keys(mapping, expected: tuple[str, ...], context: str):
    if not isinstance(mapping, dict):
        raise DocumentError(f"{context} must be an object")
    actual = set(mapping)
    missing = [key for key in expected if key not in actual]
    extra = sorted(actual - set(expected))
    if missing:
        raise DocumentError(f"{context} is missing key(s): {', '.join(missing)}")
    if extra:
        raise DocumentError(f"{context} has unknown key(s): {', '.join(extra)}")


@dataclass(frozen=True)
class EvidenceDocument:
    """A parsed document: the frame and its named BBAs, in document order."""

    frame: Frame
    bbas: dict[str, Bba]

    def bba(self, name: str) -> Bba:
        try:
            return self.bbas[name]
        except KeyError:
            available = ", ".join(self.bbas) or "none"
            raise DocumentError(
                f"no BBA named {name!r} in document (available: {available})"
            ) from None


def _parse_entry(entry, context: str):
    _require_keys(entry, ("set", "mass"), context)
    members = entry["set"]
    if not isinstance(members, list) or not members:
        raise DocumentError(f"{context}: 'set' must be a non-empty list")
    for member in members:
        if isinstance(member, bool) or not isinstance(member, (str, int)):
            raise DocumentError(
                f"{context}: set members must be labels or 1-based positions, got {member!r}"
            )
    mass = entry["mass"]
    if isinstance(mass, bool) or not isinstance(mass, (int, float)):
        raise DocumentError(f"{context}: 'mass' must be a number, got {mass!r}")
    return members, float(mass)


def parse_document(text: str, *, renormalize: bool = False) -> EvidenceDocument:
    """Parse document text into a validated frame plus named BBAs.

    Syntax errors report line and column. Semantic errors (unknown label,
    position out of range, mass-sum violation) name the offending BBA.
    With ``renormalize`` each BBA's masses are scaled to sum to one
    instead of being required to.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(
            f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    _require_keys(raw, ("frame", "bbas"), "document")
    labels = raw["frame"]
    if not isinstance(labels, list):
        raise DocumentError("'frame' must be a list of labels")
    try:
        frame = build_frame(labels)
    except ValidationError as exc:
        raise DocumentError(f"frame: {exc}") from exc
    if not isinstance(raw["bbas"], dict):
        raise DocumentError("'bbas' must be an object mapping names to entry lists")
    bbas: dict[str, Bba] = {}
    for name, entry_list in raw["bbas"].items():
        if not isinstance(entry_list, list):
            raise DocumentError(f"bba {name!r} must be a list of entries")
        entries = []
        for position, entry in enumerate(entry_list):
            entries.append(_parse_entry(entry, f"bba {name!r}, entry {position + 1}"))
        try:
            bbas[name] = build_bba(frame, entries, renormalize=renormalize)
        except ValidationError as exc:
            raise DocumentError(f"bba {name!r}: {exc}") from exc
    return EvidenceDocument(frame, bbas)


def serialize_document(document: EvidenceDocument) -> str:
    """Render a document back to text; parsing the result reproduces it."""
    payload = {
        "frame": list(document.frame.labels),
        "bbas": {
            name: [
                {"set": list(fs.labels), "mass": mass}
                for fs, mass in bba.entries
            ]
            for name, bba in document.bbas.items()
        },
    }
    return json.dumps(payload, indent=2) + "\n"

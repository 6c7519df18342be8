"""Domain errors shared across the catalogue modules.

Exception class names double as the error names surfaced on the CLI and
mapped to HTTP status codes by the API layer, so keep them stable.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class FieldIssue:
    """One problem with one submitted or parsed field."""

    field: str
    code: str
    message: str

    def as_dict(self) -> dict[str, str]:
        return {"field": self.field, "code": self.code, "message": self.message}


class EodError(Exception):
    """Base class for all domain errors."""


class SubmissionInvalid(EodError):
    """Raised by submission validation; carries every field issue at once."""

    def __init__(self, issues: list[FieldIssue]):
        self.issues = issues
        super().__init__("; ".join(f"{i.field}: {i.message}" for i in issues))


class BadParam(EodError):
    """Malformed or conflicting query/wire parameters."""

    def __init__(self, issues: list[FieldIssue]):
        self.issues = issues
        super().__init__("; ".join(f"{i.field}: {i.message}" for i in issues))


class UnknownId(EodError):
    """No record with the given id (or slug)."""


class NotPublic(EodError):
    """The record exists but is not approved, so it has no public surface."""


class InvalidTransition(EodError):
    """Moderation attempted on a record that is not pending."""


class TooFewIds(EodError):
    """Comparison requires at least two distinct record ids."""


class StorageFailure(EodError):
    """The data directory could not be read or written."""


class NonEmptyStore(EodError):
    """Import refused: the store already holds records and merge was not set."""


class BadFormat(EodError):
    """Snapshot bytes are not a well-formed snapshot."""


class VersionMismatch(EodError):
    """Snapshot format_version is not supported."""


class GeocoderUnavailable(EodError):
    """The geocoding client failed (network, timeout, bad response)."""


class NoMatch(EodError):
    """The geocoder answered but knows no such address."""


class Unauthorized(EodError):
    """Missing or unknown moderator token."""


class RateLimited(EodError):
    """Submission rate ceiling reached for this source."""


class OversizeUpload(EodError):
    """Request body exceeds the configured upload limit."""

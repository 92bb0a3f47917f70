"""Exception hierarchy shared by every sftkit module.

The CLI maps these onto exit statuses: ``InputError`` -> 65,
``ResourceLimitError`` -> 69, anything else -> 70.
"""

from __future__ import annotations


class SftError(Exception):
    """Base class for all sftkit failures."""


class InputError(SftError, ValueError):
    """Malformed or invalid input (bad word, bad file, group mismatch)."""

    def __init__(self, message: str, location: str | None = None):
        self.location = location
        if location:
            message = f"{location}: {message}"
        super().__init__(message)


class IntegrityError(InputError):
    """A presentation is internally inconsistent, e.g. a local-map table with a missing row."""


class DomainError(SftError, ValueError):
    """A pattern was evaluated outside the domain of a finite configuration."""


class ResourceLimitError(SftError):
    """A configured size cap would be exceeded."""

    def __init__(self, what: str, size: int, cap: int):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: size {size} exceeds cap {cap}")


class EmptyBoxError(SftError):
    """No locally admissible pattern exists on the requested box, so no finite entropy bound."""

    def __init__(self, box: int):
        self.box = box
        super().__init__(f"no locally admissible pattern on the box of side {box}")

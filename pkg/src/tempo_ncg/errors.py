"""Exception vocabulary shared across the package.

Every failure mode that callers are expected to catch has its own class so that
the CLI can map errors to exit codes without string matching.
"""

from __future__ import annotations


class TemporalGameError(Exception):
    """Base class for all package-specific errors."""


class IncompleteHost(TemporalGameError):
    """A host graph is missing at least one node pair."""


class NoTerminals(TemporalGameError):
    """The terminal set is empty."""


class UnknownNode(TemporalGameError):
    """A node id does not belong to the graph at hand."""


class NotASpanner(TemporalGameError):
    """An operation requires a terminal spanner and the input is not one."""


class InvalidPurchase(TemporalGameError):
    """A strategy buys a time edge the host does not offer, or one that
    violates the locality restriction of the profile's setting."""


class NotOwned(TemporalGameError):
    """An edge-level query names an agent that does not buy that edge."""


class NotSimple(TemporalGameError):
    """An operation requires a simple temporal graph (one label per pair)."""


class SettingMismatch(TemporalGameError):
    """A profile built for one setting was handed to an operation that
    requires the other."""


class PreconditionFailed(TemporalGameError):
    """A documented structural precondition does not hold for the input."""


class SearchTooLarge(TemporalGameError):
    """An exhaustive search would exceed its configured guard."""


class NotMinimal(TemporalGameError):
    """An operation requires an inclusion-minimal terminal spanner and the
    input has a removable time edge."""

"""Exception types shared across the toolkit.

The CLI maps these onto its exit-code contract: invalid input exits 2,
cost-bound refusals exit 3, verification failures exit 1.
"""


class InputError(ValueError):
    """Malformed or out-of-domain input (bad permutation text, n below a minimum, ...)."""


class NotAlternatingError(InputError):
    """A structural check was asked about a sequence that is neither alternating
    nor reverse-alternating, so the check does not apply."""


class CostBoundError(RuntimeError):
    """Refusal to start a computation whose cost guard was exceeded.

    Every guarded operation takes an ``allow_large`` flag to override."""


class VerificationError(Exception):
    """A cross-check between two routes that must agree found a disagreement."""


class CatalogError(Exception):
    """Base class for catalog store problems."""


class CatalogCorruptionError(CatalogError):
    """A stored record failed checksum or invariant validation; the message names the line."""


class CatalogConflictError(CatalogError):
    """An append would duplicate an existing (n, mode) record, or stored records disagree."""

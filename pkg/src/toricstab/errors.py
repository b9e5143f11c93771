"""Exception hierarchy for toricstab.

Every error raised by the library derives from ToricStabError so callers can
catch library failures in one clause.  Validation-type errors (bad input) are
distinguished from internal cross-check failures (OracleMismatch and friends),
which signal a bug rather than bad data.
"""


class ToricStabError(Exception):
    """Base class for all toricstab errors."""


class DimensionUnsupported(ToricStabError):
    """Ambient dimension outside the supported range {2, 3}."""


class NotFullDimensional(ToricStabError):
    """Vertex set does not affinely span the ambient space."""


class NotAVertex(ToricStabError):
    """Queried point is not a vertex of the polytope."""


class FitInconsistent(ToricStabError):
    """Exactly-fitted polynomial fails on a held-out sample (internal bug)."""


class QuasiPeriodMismatch(ToricStabError):
    """Leading weight coefficients differ across residue classes; input rejected."""


class OracleMismatch(ToricStabError):
    """Independent computation routes disagree (internal bug signal)."""


class DegenerateSubdivision(ToricStabError):
    """A dominance region with zero measure survived pruning (internal bug)."""


class EmptySupport(ToricStabError):
    """Point support is empty."""


class PreconditionViolated(ToricStabError):
    """Operation invoked outside its stated hypotheses."""


class NotDelzant(ToricStabError):
    """Vertex is not smooth (edge directions not unimodular)."""


class ChopTooDeep(ToricStabError):
    """Depth-1 corner cut would meet another vertex of the dilated polytope."""


class FitUnstable(ToricStabError):
    """Expansion-coefficient extraction is not stable over the sampled range."""


class NonDelzantPoint(ToricStabError):
    """Candidate destabilization point is not a Delzant vertex."""


class BudgetExceeded(ToricStabError):
    """Requested enumeration exceeds the configured budget."""


class ParseError(ToricStabError):
    """Model file is structurally malformed; message carries the field path."""


class ValidationError(ToricStabError):
    """Model file parsed but violates a semantic invariant."""

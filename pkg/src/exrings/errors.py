"""Error types shared across the workbench."""


class ContextError(ValueError):
    """Operands belong to incompatible ring contexts, or an operation is not
    defined for the given context (e.g. slicing a GF(3) matrix ring)."""


class WindowError(ValueError):
    """An element does not fit in the requested truncation window."""


class TheoremFalsified(RuntimeError):
    """A structural fact the engine relies on failed on concrete data.

    Raised instead of returning a wrong answer: callers are expected to
    treat this as a reportable event, never to swallow it.
    """

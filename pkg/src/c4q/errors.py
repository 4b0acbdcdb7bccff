"""Exception types shared across the engine, the NLU pipeline and the chat service."""


class C4QError(Exception):
    """Base class for all c4q errors."""


class ParameterMissingError(C4QError):
    """A gate requires a parameter (phase or angle) that was not supplied."""

    def __init__(self, slot: str, gate_id: str = ""):
        self.slot = slot
        self.gate_id = gate_id
        where = f" for gate {gate_id}" if gate_id else ""
        super().__init__(f"missing required parameter '{slot}'{where}")


class ArityMismatchError(C4QError):
    """Gate arity and initial-state qubit count disagree."""

    def __init__(self, gate_id: str, gate_arity: int, state_name: str, state_qubits: int):
        self.gate_id = gate_id
        self.gate_arity = gate_arity
        self.state_name = state_name
        self.state_qubits = state_qubits
        super().__init__(
            f"gate {gate_id} acts on {gate_arity} qubit(s) but state "
            f"{state_name} has {state_qubits} qubit(s)"
        )


class EmptyInputError(C4QError):
    """Normalization was asked to process an empty or whitespace-only string."""


class AngleParseError(C4QError):
    """An angle-looking span could not be parsed by the angle grammar."""

    def __init__(self, span: str):
        self.span = span
        super().__init__(f"cannot parse angle expression: {span!r}")


class AmbiguousGateError(C4QError):
    """Two or more distinct gates are mentioned in one question."""

    def __init__(self, candidates):
        self.candidates = tuple(candidates)
        super().__init__(f"ambiguous gate mention: {', '.join(self.candidates)}")


class AmbiguousStateError(C4QError):
    """Two or more distinct initial states are mentioned in one question."""

    def __init__(self, candidates):
        self.candidates = tuple(candidates)
        super().__init__(f"ambiguous initial state: {', '.join(self.candidates)}")


class AmbiguousAxisError(C4QError):
    """Two or more distinct rotation axes are mentioned in one question."""

    def __init__(self, candidates):
        self.candidates = tuple(candidates)
        super().__init__(f"ambiguous rotation axis: {', '.join(self.candidates)}")


class TemplateError(C4QError):
    """A phrasing template failed validation at load time."""


class CorpusTooSmallError(C4QError):
    """A corpus is too small to be split."""


class DegenerateCorpusError(C4QError):
    """A training corpus does not cover all three categories."""


class ModelVersionError(C4QError):
    """A serialized classifier has an unsupported version tag."""


class SessionNotFoundError(C4QError):
    """The referenced chat session does not exist (or was purged)."""


class SessionClosedError(C4QError):
    """The referenced chat session is closed and accepts no messages."""

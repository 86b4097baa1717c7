"""Error classes shared by every package of the workbench."""


class WorkbenchError(Exception):
    pass


class InvalidWord(WorkbenchError, ValueError):
    pass


class NotAMember(WorkbenchError, ValueError):
    pass


class InvalidPositions(WorkbenchError, ValueError):
    pass


class InvalidPair(WorkbenchError, ValueError):
    pass


class OutOfOmega(WorkbenchError, ValueError):
    pass


class InvalidKind(WorkbenchError, ValueError):
    pass


class InvalidWitness(WorkbenchError, ValueError):
    pass


class InvalidSize(WorkbenchError, ValueError):
    pass


class SizeLimit(WorkbenchError):
    pass


class InconsistentModel(WorkbenchError):
    """A solver model decoded to a colouring that does admit a witness."""


class InvalidModel(WorkbenchError, ValueError):
    pass


class InvalidInputWitness(WorkbenchError, ValueError):
    pass


class UnsupportedAlphabet(WorkbenchError, ValueError):
    pass


class NoWitnessAtN(WorkbenchError):
    pass


class PipelineStageFailure(WorkbenchError):
    def __init__(self, stage, message):
        super().__init__('stage {}: {}'.format(stage, message))
        self.stage = stage


class InvalidArity(WorkbenchError, ValueError):
    pass


class UnknownOrdering(WorkbenchError):
    pass


class RejectedResult(WorkbenchError):
    pass


class BudgetExceeded(WorkbenchError):
    def __init__(self, steps, message='budget exceeded'):
        super().__init__('{} after {} steps'.format(message, steps))
        self.steps = steps

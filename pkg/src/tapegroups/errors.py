"""Exception types shared across the package."""


class InvalidInput(ValueError):
    """Input handed to the tape machinery contains reserved symbols."""


class TapeFault(RuntimeError):
    """A tape program violated the tape contract (overwrote or crossed the start marker).

    Raised only on programming errors in generator programs, never on bad user input.
    """


class OutputFault(RuntimeError):
    """Output read from tape 1 contains a symbol outside the declared input alphabet."""


class NotInLanguage(ValueError):
    """A string failed validation against a normal-form language."""


class BadWord(ValueError):
    """A generator word contains a letter outside the generating set."""


class NoCaseMatched(RuntimeError):
    """The guess-and-check multiplication exhausted all cases; indicates a bug."""

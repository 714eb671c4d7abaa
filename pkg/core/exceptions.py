from django.core.management.base import CommandError

EXIT_USAGE = 2
EXIT_IO = 3


class Fano95Error(Exception):
    '''Base class for every domain error raised by the engine.'''

    exit_code = EXIT_USAGE


class InvalidWeightSystem(Fano95Error, ValueError):
    '''Weights violate ordering, positivity or the gcd conditions.'''


class SingularityError(Fano95Error):
    pass


class NonTerminal(SingularityError):
    '''No unit brings the weights into the form 1/r(1,a,r-a).'''


class NotQuasismooth(SingularityError):
    '''A coordinate point lies on X but no monomial witnesses quasismoothness there.'''


class AmbiguousType(SingularityError):
    '''Two witnesses at one coordinate point give different quotient types.'''


class EdgeInX(SingularityError):
    '''A whole singular edge of the ambient space lies on the hypersurface.'''


class DimensionMismatch(Fano95Error, ValueError):
    pass


class InvalidChain(Fano95Error):
    '''A blow-up chain does not fit the basket it is built on.'''


class UnknownFamily(Fano95Error, LookupError):
    pass


class ClassificationMismatch(Fano95Error):
    pass


class ExportError(Fano95Error):
    exit_code = EXIT_IO


def as_command_error(exc):
    '''Wrap a domain error so management commands exit with its code.'''
    return CommandError(str(exc), returncode=getattr(exc, 'exit_code', EXIT_USAGE))

import re
from fractions import Fraction
from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

RATIONAL_PATTERN = re.compile(r'^-?\d+(/\d+)?$')


def parse_rational(value):
    '''Parses a "num/den" or "num" string into an exact Fraction.'''
    text = str(value).strip()
    if not RATIONAL_PATTERN.match(text):
        raise ValidationError(
            _('"%(value)s" is not an exact rational; expected "num/den" or "num".'),
            params={'value': value},
        )
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ValidationError(
            _('"%(value)s" has a zero denominator.'),
            params={'value': value},
        )


def parse_rational_vector(value):
    '''Parses a comma-separated list of rationals, e.g. "7,-7/9,-1/2".'''
    parts = str(value).split(',')
    if any(not part.strip() for part in parts):
        raise ValidationError(_('Expected a comma-separated list of rationals.'))
    return tuple(parse_rational(part) for part in parts)


def validate_entry_number(value, count=95):
    '''Validates a family entry number in 1..count.'''
    try:
        number = int(value)
    except (TypeError, ValueError):
        raise ValidationError(_('Entry number must be an integer.'))
    if not 1 <= number <= count:
        raise ValidationError(
            _('Entry number must lie between 1 and %(count)s, got %(value)s.'),
            params={'count': count, 'value': number},
        )
    return number

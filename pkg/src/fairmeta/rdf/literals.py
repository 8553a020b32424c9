"""Lexical-space validation for the supported XSD datatypes."""

from __future__ import annotations

import re
from datetime import date, datetime, timedelta, timezone

from .errors import UnsupportedDatatypeError
from .terms import RDF_LANG_STRING, XSD_STRING

XSD_NS = "http://www.w3.org/2001/XMLSchema#"
XSD_DATETIME = XSD_NS + "dateTime"
XSD_DATE = XSD_NS + "date"
XSD_INTEGER = XSD_NS + "integer"
XSD_DECIMAL = XSD_NS + "decimal"
XSD_BOOLEAN = XSD_NS + "boolean"

SUPPORTED_DATATYPES = frozenset(
    {XSD_STRING, XSD_DATETIME, XSD_DATE, XSD_INTEGER, XSD_DECIMAL, XSD_BOOLEAN, RDF_LANG_STRING}
)

_DATETIME_RE = re.compile(
    r"^(-?\d{4,})-(\d{2})-(\d{2})T(\d{2}):(\d{2}):(\d{2})(\.\d+)?(Z|[+-]\d{2}:\d{2})?$"
)
_DATE_RE = re.compile(r"^(-?\d{4,})-(\d{2})-(\d{2})(Z|[+-]\d{2}:\d{2})?$")
_INTEGER_RE = re.compile(r"^[+-]?\d+$")
_DECIMAL_RE = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)$")


def _valid_offset(offset: str) -> bool:
    if offset in ("", "Z"):
        return True
    hours, minutes = int(offset[1:3]), int(offset[4:6])
    return hours <= 14 and minutes <= 59


def _valid_date_parts(year: int, month: int, day: int) -> bool:
    try:
        date(year if year != 0 else 1, month, day)
    except ValueError:
        return False
    return year != 0  # year 0000 does not exist in XSD 1.0


def validate_literal(lexical: str, datatype: str) -> bool:
    """True iff the lexical form is in the datatype's lexical space.

    Raises UnsupportedDatatypeError for datatypes outside the supported
    set; callers treat that as pass-with-warning.
    """
    if datatype not in SUPPORTED_DATATYPES:
        raise UnsupportedDatatypeError(datatype)
    if datatype in (XSD_STRING, RDF_LANG_STRING):
        return True
    if datatype == XSD_INTEGER:
        return bool(_INTEGER_RE.match(lexical))
    if datatype == XSD_DECIMAL:
        return bool(_DECIMAL_RE.match(lexical))
    if datatype == XSD_BOOLEAN:
        return lexical in ("true", "false", "1", "0")
    if datatype == XSD_DATE:
        m = _DATE_RE.match(lexical)
        if not m:
            return False
        year, month, day = int(m.group(1)), int(m.group(2)), int(m.group(3))
        return _valid_date_parts(year, month, day) and _valid_offset(m.group(4) or "")
    assert datatype == XSD_DATETIME
    m = _DATETIME_RE.match(lexical)
    if not m:
        return False
    year, month, day = int(m.group(1)), int(m.group(2)), int(m.group(3))
    hour, minute, second = int(m.group(4)), int(m.group(5)), int(m.group(6))
    if not _valid_date_parts(year, month, day):
        return False
    if hour > 24 or minute > 59 or second > 59:
        return False
    if hour == 24 and (minute != 0 or second != 0):
        return False
    return _valid_offset(m.group(8) or "")


def parse_datetime(lexical: str) -> datetime:
    """Parse an xsd:dateTime into an aware UTC datetime.

    Timezone-less values are interpreted as UTC (documented fixed rule).
    Raises ValueError on lexical forms outside the dateTime space.
    """
    if not validate_literal(lexical, XSD_DATETIME):
        raise ValueError(f"not a valid xsd:dateTime: {lexical!r}")
    m = _DATETIME_RE.match(lexical)
    assert m is not None
    year, month, day = int(m.group(1)), int(m.group(2)), int(m.group(3))
    hour, minute, second = int(m.group(4)), int(m.group(5)), int(m.group(6))
    fraction = m.group(7)
    micro = int(round(float(fraction) * 1_000_000)) if fraction else 0
    offset = m.group(8)
    extra_day = hour == 24
    if extra_day:
        hour = 0
    if offset and offset != "Z":
        sign = 1 if offset[0] == "+" else -1
        tz = timezone(sign * timedelta(hours=int(offset[1:3]), minutes=int(offset[4:6])))
    else:
        tz = timezone.utc
    value = datetime(year, month, day, hour, minute, second, micro, tzinfo=tz)
    if extra_day:
        value += timedelta(days=1)
    return value.astimezone(timezone.utc)

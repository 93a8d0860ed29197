"""Epoch helpers: every epoch in the package is seconds since 2000-01-01 12:00:00 UTC."""
from datetime import datetime, timedelta, timezone
from typing import Union

from ..errors import ConfigError

J2000 = datetime(2000, 1, 1, 12, 0, 0, tzinfo=timezone.utc)
SECONDS_PER_DAY = 86400.0


def epoch_from_datetime(moment: datetime) -> float:
    """Seconds since J2000; naive datetimes are taken as UTC."""
    if moment.tzinfo is None:
        moment = moment.replace(tzinfo=timezone.utc)
    return (moment - J2000).total_seconds()


def datetime_from_epoch(epoch: float) -> datetime:
    return J2000 + timedelta(seconds=epoch)


def parse_epoch(value: Union[str, datetime, float, int]) -> float:
    """
    Convert an ISO-8601 string, a datetime or a number of seconds into an epoch.

    Raises
    ------
    ConfigError
        If a string cannot be parsed.
    """
    if isinstance(value, datetime):
        return epoch_from_datetime(value)
    if isinstance(value, (int, float)):
        return float(value)
    text = str(value).strip()
    if text.endswith("Z"):
        text = text[:-1] + "+00:00"
    try:
        return epoch_from_datetime(datetime.fromisoformat(text))
    except ValueError as exc:
        raise ConfigError(f"invalid epoch {value!r}; expected ISO-8601 UTC") from exc


def format_epoch(epoch: float) -> str:
    return datetime_from_epoch(epoch).strftime("%Y-%m-%dT%H:%M:%S.%fZ")

# -*- coding: utf-8 -*-
"""
author: UnicornOnAzur

Settings of the command-line surface: the caps on the polygon size n per
command and the default log level. The defaults can be lowered through a TOML
file with a [caps] and a [logging] table, e.g.

    [caps]
    verify = 7
    dn_enumerate = 7

    [logging]
    level = "INFO"

Raising a cap above its hard ceiling is refused.
"""
# Standard library
import dataclasses
import enum
import logging
import os
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
import types
import typing
# Local imports
from coloredflips import errors
# Constants
DEFAULT_FILENAME: str = "coloredflips.toml"
CAPS_HEADER: str = "caps"
LOGGING_HEADER: str = "logging"
LOG_LEVELS: typing.Tuple[str, ...] = ("DEBUG", "INFO", "WARNING", "ERROR")
logger: logging.Logger = logging.getLogger(__name__)


class Cap(str, enum.Enum):
    VERIFY = "verify"
    GRAPH = "graph"
    DN_FORMULA = "dn_formula"
    DN_TABLEAUX = "dn_tableaux"
    DN_ENUMERATE = "dn_enumerate"
    ENUMERATE_CTFT = "enumerate_ctft"
    ENUMERATE_ARCPERM = "enumerate_arcperm"
    ENUMERATE_CLASSES = "enumerate_classes"
    ENUMERATE_TABLEAUX = "enumerate_tableaux"


# Largest n each command accepts. |CTFT(n)| = n*2^(n-4) and the number of
# geodesics grows superexponentially, so the geodesic based caps are small.
HARD_CAPS: typing.Dict[Cap, int] = {
    Cap.VERIFY: 9,
    Cap.GRAPH: 12,
    Cap.DN_FORMULA: 60,
    Cap.DN_TABLEAUX: 12,
    Cap.DN_ENUMERATE: 8,
    Cap.ENUMERATE_CTFT: 12,
    Cap.ENUMERATE_ARCPERM: 12,
    Cap.ENUMERATE_CLASSES: 12,
    Cap.ENUMERATE_TABLEAUX: 8,
}
# Smallest n each command accepts.
FLOORS: typing.Dict[Cap, int] = {
    Cap.VERIFY: 5,
    Cap.GRAPH: 5,
    Cap.DN_FORMULA: 6,
    Cap.DN_TABLEAUX: 5,
    Cap.DN_ENUMERATE: 5,
    Cap.ENUMERATE_CTFT: 5,
    Cap.ENUMERATE_ARCPERM: 2,
    Cap.ENUMERATE_CLASSES: 4,
    Cap.ENUMERATE_TABLEAUX: 4,
}


@dataclasses.dataclass(frozen=True)
class Settings:
    caps: typing.Mapping[Cap, int] = dataclasses.field(
        default_factory=lambda: types.MappingProxyType(dict(HARD_CAPS)))
    log_level: str = "WARNING"

    def check(self, cap: Cap, n: int) -> None:
        """
        Refuse a polygon size outside the range of a command.

        Parameters:
            cap : The command (or command variant) being run.
            n : The requested polygon size.

        Raises:
            errors.InvalidSizeError: If n is below the smallest supported
            size.
            errors.CapExceededError: If n is above the configured cap.
        """
        if n < FLOORS[cap]:
            raise errors.InvalidSizeError(
                f"{cap.value} needs n >= {FLOORS[cap]}, got {n}.")
        if n > self.caps[cap]:
            raise errors.CapExceededError(
                f"{cap.value} is capped at n <= {self.caps[cap]}, got {n}.")


def _read_caps(table: typing.Mapping[str, typing.Any]
               ) -> typing.Dict[Cap, int]:
    """
    Validate the [caps] table against the hard ceilings.

    Raises:
        errors.DomainError: If a key is unknown or a value is not an integer.
        errors.CapExceededError: If a cap is raised above its ceiling.
    """
    caps: typing.Dict[Cap, int] = dict(HARD_CAPS)
    known: typing.Set[str] = {cap.value for cap in Cap}
    for key, value in table.items():
        if key not in known:
            raise errors.DomainError(f"Unknown cap '{key}' in the settings.")
        if not isinstance(value, int) or isinstance(value, bool):
            raise errors.DomainError(
                f"The cap '{key}' must be an integer, got {value!r}.")
        cap = Cap(key)
        if value > HARD_CAPS[cap]:
            raise errors.CapExceededError(
                f"The cap '{key}' cannot be raised above {HARD_CAPS[cap]}.")
        caps[cap] = value
    return caps


def load_settings(path: typing.Optional[str] = None) -> Settings:
    """
    Load the settings from a TOML file. Without a path the file
    coloredflips.toml in the working directory is used when it exists;
    otherwise the defaults apply.

    Parameters:
        path : Optional path to a TOML file.

    Returns:
        The validated settings.

    Raises:
        errors.DomainError: If the file holds unknown tables or keys.
        errors.CapExceededError: If a cap is raised above its ceiling.
        FileNotFoundError: If an explicit path does not exist.
    """
    if path is None:
        if not os.path.isfile(DEFAULT_FILENAME):
            logger.debug("No settings file found, using the defaults.")
            return Settings()
        path = DEFAULT_FILENAME
    with open(path, "rb") as file:
        try:
            document: typing.Dict[str, typing.Any] = tomllib.load(file)
        except tomllib.TOMLDecodeError as exc:
            raise errors.DomainError(f"{path} is not valid TOML: {exc}")
    if unknown := set(document) - {CAPS_HEADER, LOGGING_HEADER}:
        raise errors.DomainError(
            f"Unknown tables in {path}: {sorted(unknown)}.")
    caps = _read_caps(document.get(CAPS_HEADER, {}))
    logging_table: typing.Dict[str, typing.Any] = document.get(
        LOGGING_HEADER, {})
    if unknown := set(logging_table) - {"level"}:
        raise errors.DomainError(
            f"Unknown keys in [{LOGGING_HEADER}]: {sorted(unknown)}.")
    level: str = str(logging_table.get("level", "WARNING")).upper()
    if level not in LOG_LEVELS:
        raise errors.DomainError(f"Unknown log level '{level}'.")
    logger.info(f"Settings read from {path}.")
    return Settings(types.MappingProxyType(caps), level)

import dataclasses
import json
import logging
import os
from pathlib import Path

from appdirs import AppDirs

from knotperm.util.json_lib import JsonObject, dumps_stable

roaming_dirs = AppDirs("knotperm", False, roaming=True)

logger = logging.getLogger(__name__)

MAX_N_VARIABLE = "KNOTPERM_MAX_N"
THREADS_VARIABLE = "KNOTPERM_THREADS"


def default_preferences_path() -> Path:
    return Path(roaming_dirs.user_config_dir).joinpath("preferences.json")


def _decode_int(data: JsonObject, key: str, default: int) -> int:
    value = data.get(key)
    if value is None:
        return default
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        logger.warning("ignoring %s=%r in preferences, expected a positive integer", key, value)
        return default
    return value


def _env_int(environ: dict[str, str], key: str) -> int | None:
    raw = environ.get(key)
    if raw is None or not raw.strip():
        return None
    try:
        value = int(raw)
    except ValueError:
        logger.warning("ignoring %s=%r, not an integer", key, raw)
        return None
    if value < 1:
        logger.warning("ignoring %s=%r, must be at least 1", key, raw)
        return None
    return value


@dataclasses.dataclass()
class Preferences:
    """Enumeration caps and worker count. Flags beat the environment, which beats the file."""

    cycle_cap: int = 11
    derangement_cap: int = 10
    permutation_cap: int = 8
    threads: int = 1

    def read_from_user_home(self) -> None:
        return self.read_from_path(default_preferences_path())

    def read_from_path(self, path: Path) -> None:
        try:
            with path.open() as f:
                self.read_from_json(json.load(f))
        except FileNotFoundError:
            pass

    def read_from_json(self, data: JsonObject) -> None:
        self.cycle_cap = _decode_int(data, "cycle_cap", self.cycle_cap)
        self.derangement_cap = _decode_int(data, "derangement_cap", self.derangement_cap)
        self.permutation_cap = _decode_int(data, "permutation_cap", self.permutation_cap)
        self.threads = _decode_int(data, "threads", self.threads)

    def apply_environment(self, environ: dict[str, str] | None = None) -> None:
        if environ is None:
            environ = dict(os.environ)
        max_n = _env_int(environ, MAX_N_VARIABLE)
        if max_n is not None:
            self.cycle_cap = self.derangement_cap = self.permutation_cap = max_n
        threads = _env_int(environ, THREADS_VARIABLE)
        if threads is not None:
            self.threads = threads

    def to_json(self) -> JsonObject:
        return {
            "cycle_cap": self.cycle_cap,
            "derangement_cap": self.derangement_cap,
            "permutation_cap": self.permutation_cap,
            "threads": self.threads,
        }

    def write_to_user_home(self) -> None:
        return self.write_to_path(default_preferences_path())

    def write_to_path(self, path: Path) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(dumps_stable(self.to_json()))


def load_preferences(path: Path | None = None, environ: dict[str, str] | None = None) -> Preferences:
    """Defaults, then the preferences file, then the environment."""
    preferences = Preferences()
    if path is None:
        preferences.read_from_user_home()
    else:
        preferences.read_from_path(path)
    preferences.apply_environment(environ)
    return preferences

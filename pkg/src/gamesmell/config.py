"""Analysis configuration: thresholds, lexicons, and serialization.

Every threshold is a strict or inclusive bound as documented on the detector
that uses it; all must be positive. Configs round-trip losslessly through
dicts (and therefore JSON), and loading rejects unknown keys so a typo in a
config file fails fast instead of silently running with defaults.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field, fields
from typing import Any, Final

DEFAULT_IGNORE_DIRS: Final = ("node_modules", "dist", "build", "vendor", ".git")

# Identifier vocabulary per engine subsystem; a trailing * matches any
# identifier starting with the stem, otherwise the whole identifier must
# match. Comparison is case-insensitive.
DEFAULT_COMPONENT_LEXICON: Final[dict[str, tuple[str, ...]]] = {
    "ai": ("ai", "pathfind*", "behavior"),
    "audio": ("audio", "sound", "sfx", "music", "play*"),
    "graphics": ("canvas", "ctx", "draw*", "render*", "sprite", "image",
                 "atlas", "texture", "webgl"),
    "network": ("fetch", "xmlhttprequest", "websocket", "socket"),
    "physics": ("velocity", "gravity", "collide*", "physics", "impulse"),
    "storage": ("localstorage", "sessionstorage", "indexeddb"),
}

# Substrings that mark a function as per-frame or per-input work.
DEFAULT_HOT_PATH_NAMES: Final = (
    "update", "render", "draw", "tick", "step", "loop", "frame", "animate",
    "poll", "query", "key", "input",
)

DEFAULT_QUEUE_NAME_PATTERN: Final = r"queue|event(list|buffer|stack)"

ALL_SMELL_CODES: Final = tuple(f"S{i}" for i in range(1, 14))
ALL_PATTERN_CODES: Final = ("P1", "P2", "P3", "P4")
ALL_CODES: Final = ALL_SMELL_CODES + ALL_PATTERN_CODES


class ConfigError(ValueError):
    """Raised for malformed configuration input; maps to usage exit code."""


@dataclass(frozen=True)
class AnalysisConfig:
    closure_depth: int = 4          # s1: function nesting depth that counts
    globals_max: int = 10           # s4: allowed globals before findings
    large_object_props: int = 20    # s5: members at or past this flag
    lazy_object_props: int = 3      # s6: strictly fewer members flags
    chain_min: int = 4              # s7: member/call links at or past this
    method_loc_max: int = 50        # s8: own body LOC strictly past this
    params_max: int = 4             # s9: parameters strictly past this
    callback_depth: int = 3         # s10: nested callbacks at or past this
    bequest_ratio: float = 1 / 3    # s11: used share strictly below this
    switch_cases_min: int = 3       # s12: non-default cases at or past this
    html_string_min_tags: int = 2   # s2: markup tags in a string at or past
    queue_name_pattern: str = DEFAULT_QUEUE_NAME_PATTERN
    ignore_dirs: tuple[str, ...] = DEFAULT_IGNORE_DIRS
    enabled: tuple[str, ...] | None = None  # None means every detector
    component_lexicon: dict[str, tuple[str, ...]] = field(
        default_factory=lambda: dict(DEFAULT_COMPONENT_LEXICON)
    )
    hot_path_names: tuple[str, ...] = DEFAULT_HOT_PATH_NAMES

    def __post_init__(self) -> None:
        for f in fields(self):
            if f.type == "int":
                value = getattr(self, f.name)
                if not isinstance(value, int) or isinstance(value, bool) or value <= 0:
                    raise ConfigError(f"{f.name} must be a positive integer")
        if not (isinstance(self.bequest_ratio, (int, float))
                and 0 < self.bequest_ratio <= 1):
            raise ConfigError("bequest_ratio must be in (0, 1]")
        try:
            re.compile(self.queue_name_pattern)
        except re.error as exc:
            raise ConfigError(f"queue_name_pattern is not a valid regex: {exc}")
        if self.enabled is not None:
            for code in self.enabled:
                if code not in ALL_CODES:
                    raise ConfigError(f"unknown detector code {code!r}")

    def is_enabled(self, code: str) -> bool:
        return self.enabled is None or code in self.enabled

    # --- serialization ---

    def to_dict(self) -> dict[str, Any]:
        return {
            "closure_depth": self.closure_depth,
            "globals_max": self.globals_max,
            "large_object_props": self.large_object_props,
            "lazy_object_props": self.lazy_object_props,
            "chain_min": self.chain_min,
            "method_loc_max": self.method_loc_max,
            "params_max": self.params_max,
            "callback_depth": self.callback_depth,
            "bequest_ratio": self.bequest_ratio,
            "switch_cases_min": self.switch_cases_min,
            "html_string_min_tags": self.html_string_min_tags,
            "queue_name_pattern": self.queue_name_pattern,
            "ignore_dirs": list(self.ignore_dirs),
            "enabled": list(self.enabled) if self.enabled is not None else None,
            "component_lexicon": {k: list(v) for k, v in sorted(self.component_lexicon.items())},
            "hot_path_names": list(self.hot_path_names),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "AnalysisConfig":
        if not isinstance(data, dict):
            raise ConfigError("config must be a JSON object")
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown config key {sorted(unknown)[0]!r}")
        kwargs: dict[str, Any] = {}
        for key, value in data.items():
            if key == "ignore_dirs":
                kwargs[key] = tuple(str(d) for d in value)
            elif key == "hot_path_names":
                kwargs[key] = tuple(str(d) for d in value)
            elif key == "enabled":
                kwargs[key] = None if value is None else tuple(str(c) for c in value)
            elif key == "component_lexicon":
                if not isinstance(value, dict):
                    raise ConfigError("component_lexicon must be an object")
                kwargs[key] = {str(k): tuple(str(t) for t in v) for k, v in value.items()}
            else:
                kwargs[key] = value
        try:
            return cls(**kwargs)
        except TypeError as exc:
            raise ConfigError(str(exc)) from None

    @classmethod
    def from_file(cls, path: str) -> "AnalysisConfig":
        try:
            with open(path, encoding="utf-8") as handle:
                data = json.load(handle)
        except OSError as exc:
            raise ConfigError(f"cannot read config file: {exc}") from None
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config file is not valid JSON: {exc}") from None
        return cls.from_dict(data)

    # --- lexicon queries ---

    def classify_component(self, identifier: str) -> list[str]:
        """Component categories the identifier belongs to, alphabetical."""
        name = identifier.lower()
        matched = []
        for category in sorted(self.component_lexicon):
            for token in self.component_lexicon[category]:
                if _token_matches(token.lower(), name):
                    matched.append(category)
                    break
        return matched

    def is_hot_path_name(self, identifier: str) -> bool:
        name = identifier.lower()
        return any(token in name for token in self.hot_path_names)


def _token_matches(token: str, name: str) -> bool:
    if token.endswith("*"):
        return name.startswith(token[:-1])
    return name == token

"""
Loader for flat `key = value` config files.

Grammar:
    line    := blank | comment | entry
    comment := '#' anything
    entry   := key '=' value [comment]
    key     := [section '.'] field      (bare keys belong to `experiment`)
    value   := text; list fields take comma-separated items

Precedence is file > environment > defaults: each section is built as
`SectionSettings(**file_values)`, which still reads its own env prefix.
"""

from pathlib import Path
from typing import Any, Union, get_args, get_origin

from pydantic import ValidationError

from app.errors import ConfigError

from .settings import SECTIONS, Settings

DEFAULT_CONFIG = "default"


def parse_config_text(text: str, source: str = "<config>") -> dict[str, dict[str, str]]:
    """
    Split config text into {section: {field: raw value}}.

    Raises:
        ConfigError: On malformed lines, unknown sections or duplicated keys
    """
    sections: dict[str, dict[str, str]] = {}
    for number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{number}: expected 'key = value', got {raw_line.strip()!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if not key:
            raise ConfigError(f"{source}:{number}: missing key")
        section, _, field = key.rpartition(".")
        section = section.lower() or "experiment"
        field = field.lower()
        if section not in SECTIONS:
            raise ConfigError(f"unknown section {section!r}; valid: {', '.join(SECTIONS)}", field=key)
        if field in sections.setdefault(section, {}):
            raise ConfigError("duplicated key", field=key)
        sections[section][field] = value
    return sections


def _is_list(annotation: Any) -> bool:
    if get_origin(annotation) is list:
        return True
    if get_origin(annotation) is Union:
        return any(_is_list(arg) for arg in get_args(annotation))
    return False


def _coerce(section: str, values: dict[str, str]) -> dict[str, Any]:
    model = SECTIONS[section]
    fields = model.model_fields
    coerced: dict[str, Any] = {}
    for name, raw in values.items():
        if name not in fields:
            raise ConfigError(
                f"unknown field; valid: {', '.join(sorted(fields))}", field=f"{section}.{name}"
            )
        if _is_list(fields[name].annotation):
            coerced[name] = [item.strip() for item in raw.split(",") if item.strip()]
        else:
            coerced[name] = raw
    return coerced


def build_settings(sections: dict[str, dict[str, str]]) -> Settings:
    """
    Build Settings from parsed sections.

    Raises:
        ConfigError: Naming the first invalid field
    """
    built: dict[str, Any] = {}
    for section, model in SECTIONS.items():
        values = _coerce(section, sections.get(section, {}))
        try:
            built[section] = model(**values)
        except ValidationError as exc:
            error = exc.errors()[0]
            location = ".".join(str(part) for part in error["loc"])
            field = f"{section}.{location}" if location else section
            raise ConfigError(error["msg"], field=field) from exc
    return Settings(**built)


def load_settings(path: str | Path | None = None) -> Settings:
    """
    Load settings from a config file, or defaults for None / "default".

    Raises:
        ConfigError: If the file cannot be read or is invalid
    """
    if path is None or str(path) == DEFAULT_CONFIG:
        return build_settings({})
    config_path = Path(path)
    try:
        text = config_path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config file {config_path}: {exc}") from exc
    return build_settings(parse_config_text(text, source=str(config_path)))

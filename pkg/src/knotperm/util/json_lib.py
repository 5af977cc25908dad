from __future__ import annotations

import json

JsonObject = dict[str, "JsonValue"]
JsonArray = list["JsonValue"]
JsonValue = str | int | float | bool | JsonObject | JsonArray | None


def dumps_stable(data: JsonValue) -> str:
    """Serializes with sorted keys, so that re-encoding parsed output is byte-identical."""
    return json.dumps(data, indent=4, sort_keys=True) + "\n"


def drop_none(data: JsonObject) -> JsonObject:
    return {key: value for key, value in data.items() if value is not None}

import json

from typing import Any, List

from models.drawing import Drawing

def to_json(value: Any) -> str:
    """Serializes a model (or list of models) through its `__json__` shape with stable key order."""
    return json.dumps(_plain(value), indent=2, sort_keys=True)

def _plain(value: Any) -> Any:
    if hasattr(value, "__json__"):
        return value.__json__()
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    if isinstance(value, dict):
        return {key: _plain(item) for key, item in value.items()}
    return value

def drawing_to_dot(drawing: Drawing) -> str:
    """DOT text with one node per element, labelled by its tree code, and one edge per non-identity hom."""
    lines: List[str] = [f"digraph {_quote(drawing.label)} {{"]
    for obj in drawing.index.objects:
        lines.append(f"  {_quote(obj.label())} [label={_quote(obj.code)}];")
    for item in drawing.arrows:
        if item.arrow.is_identity():
            continue
        lines.append(
            f"  {_quote(item.arrow.target.label())} -> {_quote(item.arrow.source.label())} "
            f"[label={_quote(item.arrow.morphism.kind.value)}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"

def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'

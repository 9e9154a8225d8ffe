import json
import logging

from pathlib import Path
from pydantic import BaseModel, ValidationError
from typing import Any, Type, TypeVar

from errors import InputError
from models.directed_graph import DirectedGraph
from models.fin_dendroidal_set import FinDendroidalSet, PresheafAction
from models.tree import Tree
from models.tree_morphism import MorphismKind, TreeMorphism
from omega.canonical import tree_from_code
from presheaf.elements import validate_presheaf

logger = logging.getLogger(__name__)

Model = TypeVar("Model", bound=BaseModel)

class FileConnector:
    """Reads the JSON inputs of the command line and turns every failure into an `InputError`."""
    _path: Path

    def __init__(self, path: str):
        self._path = Path(path)

    def load_tree(self) -> Tree:
        return self._validate(Tree, self._read())

    def load_morphism(self) -> TreeMorphism:
        return self._validate(TreeMorphism, self._read())

    def load_morphism_between(self, source: Tree, target: Tree) -> TreeMorphism:
        """Reads an edge map, either bare or under an "edge_map" key, and checks it is a morphism source -> target."""
        document = self._read()
        if isinstance(document, dict) and isinstance(document.get("edge_map"), dict):
            document = document["edge_map"]
        return self._validate(TreeMorphism, {"source": source, "target": target, "edge_map": document})

    def load_graph(self) -> DirectedGraph:
        return self._validate(DirectedGraph, self._read())

    def load_presheaf(self) -> FinDendroidalSet:
        document = self._read()
        if not isinstance(document, dict) or "bound" not in document or "values" not in document:
            raise InputError(f"{self._path}: a presheaf needs 'bound' and 'values'")
        actions = [self._action(position, action) for position, action in enumerate(document.get("actions", []))]
        presheaf = self._validate(FinDendroidalSet, {
            "label": document.get("label", self._path.stem),
            "bound": document["bound"],
            "values": document["values"],
            "actions": actions
        })
        validate_presheaf(presheaf)
        logger.debug(f"Loaded {presheaf.label} with {presheaf.size()} elements from {self._path}")
        return presheaf

    def _action(self, position: int, action: Any) -> PresheafAction:
        try:
            source = tree_from_code(action["from"])
            target = tree_from_code(action["to"])
            morphism = TreeMorphism(
                source=source,
                target=target,
                edge_map=action["edge_map"],
                kind=MorphismKind(action.get("map_kind", MorphismKind.COMPOSITE.value)),
                locus=action.get("locus")
            )
            return PresheafAction(morphism=morphism, source_code=action["from"], target_code=action["to"], table=action["table"])
        except (KeyError, TypeError) as error:
            raise InputError(f"{self._path}: action {position} is missing {error}")
        except ValueError as error:
            raise InputError(f"{self._path}: action {position} is invalid: {_describe(error)}")
        except InputError as error:
            raise InputError(f"{self._path}: action {position}: {error.detail}")

    def _read(self) -> Any:
        try:
            text = self._path.read_text()
        except OSError as error:
            raise InputError(f"Could not read {self._path}: {error.strerror}")
        try:
            return json.loads(text)
        except json.JSONDecodeError as error:
            raise InputError(f"{self._path}: malformed JSON at line {error.lineno}, column {error.colno}: {error.msg}")

    def _validate(self, model: Type[Model], document: Any) -> Model:
        try:
            return model.model_validate(document)
        except ValidationError as error:
            raise InputError(f"{self._path}: invalid {model.__name__}: {_describe(error)}")

def _describe(error: ValueError) -> str:
    if isinstance(error, ValidationError):
        first = error.errors()[0]
        location = ".".join(str(part) for part in first["loc"]) or "<root>"
        return f"{first['msg']} at {location}"
    return str(error)

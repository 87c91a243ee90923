"""Pydantic request/response models for the game API."""

from __future__ import annotations

from typing import Any, Literal, Optional

from pydantic import BaseModel, Field, model_validator


class GraphModel(BaseModel):
    vertices: int = Field(ge=1)
    edges: list[tuple[int, int]]
    labels: Optional[list[str]] = None


class CreateSessionRequest(BaseModel):
    kind: Literal["dollar", "gonality"]
    graph: Optional[GraphModel] = None
    family: Optional[str] = None
    size: Optional[int] = Field(default=None, ge=1)
    parts: Optional[list[int]] = None
    budget: Optional[int] = Field(default=None, ge=0)
    initial_chips: Optional[list[int]] = None
    adversary: Literal["engine", "human"] = "engine"

    @model_validator(mode="after")
    def check_source(self) -> "CreateSessionRequest":
        if (self.graph is None) == (self.family is None):
            raise ValueError("provide exactly one of 'graph' or 'family'")
        if self.kind == "gonality" and self.budget is None:
            raise ValueError("gonality sessions need a 'budget'")
        if self.kind == "dollar" and self.initial_chips is None:
            raise ValueError("dollar sessions need 'initial_chips'")
        return self


class SessionState(BaseModel):
    id: str
    kind: str
    phase: str
    adversary: str
    adversary_pending: bool
    budget: Optional[int]
    family: Optional[str]
    graph: dict[str, Any]
    layout: list[list[float]]
    chips: list[int]
    degree: int
    move_log: list[dict[str, Any]]


class PlaceRequest(BaseModel):
    chips: list[int]


class DebtRequest(BaseModel):
    vertex: int = Field(ge=0)


class FireRequest(BaseModel):
    vertices: list[int] = Field(min_length=1)


class HintResponse(BaseModel):
    kind: str
    vertices: list[int] = []
    detail: Optional[str] = None

"""FastAPI application exposing the interactive game API under /api/v1."""

from __future__ import annotations

from pathlib import Path

from fastapi import APIRouter, FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .. import graphs
from ..graphs import FAMILIES, Multigraph
from .schemas import (
    CreateSessionRequest,
    DebtRequest,
    FireRequest,
    HintResponse,
    PlaceRequest,
    SessionState,
)
from .sessions import GameSession, PhaseError, SessionNotFound, SessionStore


def _build_graph(request: CreateSessionRequest) -> tuple[Multigraph, str | None]:
    if request.graph is not None:
        model = request.graph
        return Multigraph(model.vertices, model.edges, labels=model.labels), None
    family = request.family
    assert family is not None
    if family in FAMILIES:
        return FAMILIES[family](), family
    if family == "complete":
        return graphs.complete(_need_size(request)), family
    if family == "cycle":
        return graphs.cycle(_need_size(request)), family
    if family == "path":
        return graphs.path(_need_size(request)), family
    if family == "hypercube":
        return graphs.hypercube(_need_size(request)), family
    if family == "complete-multipartite":
        if not request.parts:
            raise ValueError("complete-multipartite needs 'parts'")
        return graphs.complete_multipartite(request.parts), family
    raise ValueError(f"unknown graph family {family!r}")


def _need_size(request: CreateSessionRequest) -> int:
    if request.size is None:
        raise ValueError(f"family {request.family!r} needs a 'size'")
    return request.size


def create_app(
    static_dir: str | Path | None = None,
    session_dir: str | Path | None = None,
) -> FastAPI:
    app = FastAPI(title="gonlab", version="0.1.0")
    store = SessionStore(persist_dir=session_dir)
    app.state.store = store
    api = APIRouter(prefix="/api/v1")

    def _state(session: GameSession) -> SessionState:
        return SessionState(**session.snapshot())

    @app.exception_handler(ValueError)
    async def _value_error(_: Request, exc: ValueError):
        return JSONResponse(status_code=400, content={"error": str(exc)})

    @app.exception_handler(PhaseError)
    async def _phase_error(_: Request, exc: PhaseError):
        return JSONResponse(
            status_code=409, content={"error": str(exc), "phase": exc.phase}
        )

    @app.exception_handler(SessionNotFound)
    async def _not_found(_: Request, exc: SessionNotFound):
        return JSONResponse(
            status_code=404, content={"error": f"unknown session {exc.args[0]}"}
        )

    @api.post("/sessions", response_model=SessionState)
    def create_session(request: CreateSessionRequest) -> SessionState:
        graph, family = _build_graph(request)
        session = store.create(
            graph=graph,
            kind=request.kind,
            budget=request.budget,
            adversary=request.adversary,
            initial_chips=request.initial_chips,
            family=family,
        )
        return _state(session)

    @api.get("/sessions/{session_id}", response_model=SessionState)
    def get_session(session_id: str) -> SessionState:
        session = store.get(session_id)
        with session.lock:
            return _state(session)

    @api.post("/sessions/{session_id}/place", response_model=SessionState)
    def place(session_id: str, request: PlaceRequest) -> SessionState:
        session = store.get(session_id)
        with session.lock:
            session.place(request.chips)
            store.persist(session)
            return _state(session)

    @api.post("/sessions/{session_id}/debt", response_model=SessionState)
    def place_debt(session_id: str, request: DebtRequest) -> SessionState:
        session = store.get(session_id)
        with session.lock:
            session.place_debt(request.vertex)
            store.persist(session)
            return _state(session)

    @api.post("/sessions/{session_id}/fire", response_model=SessionState)
    def fire(session_id: str, request: FireRequest) -> SessionState:
        session = store.get(session_id)
        with session.lock:
            session.fire(request.vertices)
            store.persist(session)
            return _state(session)

    @api.post("/sessions/{session_id}/resign", response_model=SessionState)
    def resign(session_id: str) -> SessionState:
        session = store.get(session_id)
        with session.lock:
            session.resign()
            store.persist(session)
            return _state(session)

    @api.get("/sessions/{session_id}/hint", response_model=HintResponse)
    def hint(session_id: str) -> HintResponse:
        session = store.get(session_id)
        with session.lock:
            return HintResponse(**session.hint())

    app.include_router(api)

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app

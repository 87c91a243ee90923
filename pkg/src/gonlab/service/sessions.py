"""Game sessions: state machine, engine adversary, and the session store.

A session walks the phases ``placing -> sabotage -> firing -> won|lost``
(the debt-clearing kind starts directly at ``firing``).  Every state change
is a move dict appended to the log, and replaying the log from the initial
state reproduces the session exactly; the engine's choices are recorded in
the log rather than recomputed, so replays are deterministic.
"""

from __future__ import annotations

import json
import threading
import uuid
from pathlib import Path
from typing import Any

from ..dhar import _burn_raw, _winnable_raw
from ..divisors import Divisor
from ..graphs import Multigraph
from ..layouts import circle_layout, family_layout

PHASES = ("placing", "sabotage", "firing", "won", "lost")
KINDS = ("dollar", "gonality")

# Above this many vertices the adversary sweep runs off the request path.
ADVERSARY_SYNC_LIMIT = 20


class SessionNotFound(KeyError):
    pass


class PhaseError(RuntimeError):
    def __init__(self, message: str, phase: str):
        super().__init__(message)
        self.phase = phase


class GameSession:
    def __init__(
        self,
        session_id: str,
        graph: Multigraph,
        kind: str,
        *,
        budget: int | None = None,
        adversary: str = "engine",
        initial_chips: list[int] | None = None,
        family: str | None = None,
    ):
        if kind not in KINDS:
            raise ValueError(f"unknown game kind {kind!r}")
        if adversary not in ("engine", "human"):
            raise ValueError(f"unknown adversary {adversary!r}")
        if not graph.is_connected():
            raise ValueError("game graphs must be connected")
        self.id = session_id
        self.graph = graph
        self.kind = kind
        self.adversary = adversary
        self.family = family
        self.layout = (
            family_layout(family, graph) if family else circle_layout(graph.vertex_count)
        )
        self.move_log: list[dict] = []
        self.adversary_pending = False
        self.lock = threading.RLock()
        if kind == "gonality":
            if budget is None or budget < 0:
                raise ValueError("gonality sessions need a nonnegative chip budget")
            self.budget = budget
            self.chips = [0] * graph.vertex_count
            self.phase = "placing"
        else:
            if initial_chips is None:
                raise ValueError("dollar sessions need an initial divisor")
            d = Divisor(graph, initial_chips)
            self.budget = None
            self.chips = list(d.chips)
            self.phase = "won" if d.is_effective() else "firing"

    # -- mechanics ---------------------------------------------------------

    def _require_phase(self, *phases: str) -> None:
        if self.phase not in phases:
            raise PhaseError(
                f"action requires phase {' or '.join(phases)}, session is {self.phase}",
                self.phase,
            )

    def _apply(self, move: dict) -> None:
        """Pure transition: mutate state according to one logged move."""
        kind = move["kind"]
        if kind == "place":
            self._require_phase("placing")
            chips = move["chips"]
            if len(chips) != self.graph.vertex_count:
                raise ValueError("placement length does not match vertex count")
            if any(not isinstance(c, int) or isinstance(c, bool) or c < 0 for c in chips):
                raise ValueError("placement chips must be nonnegative integers")
            if sum(chips) != self.budget:
                raise ValueError(f"placement must use exactly {self.budget} chips")
            self.chips = list(chips)
            self.phase = "sabotage"
        elif kind == "debt":
            self._require_phase("sabotage")
            v = move["vertex"]
            self.graph._check_vertex(v)
            self.chips[v] -= 1
            if move.get("by") == "engine" and move.get("refutes"):
                self.phase = "lost"
            elif all(c >= 0 for c in self.chips):
                # Debt landed on a chip pile: nothing to clear, instant win.
                self.phase = "won"
            else:
                self.phase = "firing"
        elif kind == "fire":
            self._require_phase("firing")
            vertices = self.graph._check_subset(move["vertices"])
            if not vertices:
                raise ValueError("fire needs at least one vertex")
            fired = Divisor(self.graph, self.chips).fire_set(vertices)
            self.chips = list(fired.chips)
            if all(c >= 0 for c in self.chips):
                self.phase = "won"
        elif kind == "resign":
            self._require_phase("placing", "sabotage", "firing")
            self.phase = "lost"
        else:
            raise ValueError(f"unknown move kind {kind!r}")
        self.move_log.append(move)

    # -- player actions ------------------------------------------------------

    def place(self, chips: list[int]) -> None:
        if self.kind != "gonality":
            raise PhaseError("only gonality sessions have a placing phase", self.phase)
        self._apply({"kind": "place", "chips": list(chips)})
        if self.adversary == "engine":
            if self.graph.vertex_count <= ADVERSARY_SYNC_LIMIT:
                self._apply(self._engine_debt_move())
            else:
                self.adversary_pending = True
                worker = threading.Thread(target=self._engine_debt_async, daemon=True)
                worker.start()

    def _engine_debt_move(self) -> dict:
        """The exhaustive adversary: try every vertex, keep an unwinnable one."""
        found = None
        for v in self.graph.vertices():
            probe = list(self.chips)
            probe[v] -= 1
            if not _winnable_raw(self.graph, probe):
                found = v
                break
        if found is not None:
            vertex = found
        else:
            # No refutation exists; still make the player work for the win.
            vertex = min(self.graph.vertices(), key=lambda v: (self.chips[v], v))
        return {
            "kind": "debt",
            "vertex": vertex,
            "by": "engine",
            "refutes": found is not None,
        }

    def _engine_debt_async(self) -> None:
        move = self._engine_debt_move()
        with self.lock:
            self._apply(move)
            self.adversary_pending = False

    def place_debt(self, vertex: int) -> None:
        if self.adversary == "engine":
            raise PhaseError("the engine adversary places the debt", self.phase)
        self._apply({"kind": "debt", "vertex": vertex, "by": "player_b"})

    def fire(self, vertices: list[int]) -> None:
        if self.adversary_pending:
            raise PhaseError("adversary move still pending", self.phase)
        self._apply({"kind": "fire", "vertices": sorted(set(vertices))})

    def resign(self) -> None:
        self._apply({"kind": "resign"})

    def hint(self) -> dict:
        """The burning step's advice: fire whatever the fire cannot reach."""
        self._require_phase("firing")
        debt = [v for v in self.graph.vertices() if self.chips[v] < 0]
        if not debt:
            return {"kind": "effective", "vertices": []}
        if len(debt) > 1:
            return {
                "kind": "clear_debt_first",
                "vertices": debt,
                "detail": "burning advice needs all debt on one vertex",
            }
        q = debt[0]
        burned, count, _ = _burn_raw(self.graph._nbrs, self.chips, q)
        if count == self.graph.vertex_count:
            return {"kind": "unwinnable", "vertices": []}
        unburned = [v for v in self.graph.vertices() if not burned[v]]
        return {"kind": "fire_set", "vertices": unburned}

    # -- serialisation ---------------------------------------------------------

    def snapshot(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "kind": self.kind,
            "phase": self.phase,
            "adversary": self.adversary,
            "adversary_pending": self.adversary_pending,
            "budget": self.budget,
            "family": self.family,
            "graph": {
                "vertices": self.graph.vertex_count,
                "edges": [[u, v] for u, v in self.graph.edge_pairs()],
            },
            "layout": [list(p) for p in self.layout],
            "chips": list(self.chips),
            "degree": sum(self.chips),
            "move_log": [dict(m) for m in self.move_log],
        }

    @classmethod
    def replay(
        cls,
        graph: Multigraph,
        kind: str,
        move_log: list[dict],
        *,
        budget: int | None = None,
        adversary: str = "engine",
        initial_chips: list[int] | None = None,
        family: str | None = None,
    ) -> "GameSession":
        session = cls(
            "replay",
            graph,
            kind,
            budget=budget,
            adversary=adversary,
            initial_chips=initial_chips,
            family=family,
        )
        for move in move_log:
            session._apply(dict(move))
        return session


class SessionStore:
    def __init__(self, persist_dir: str | Path | None = None):
        self._sessions: dict[str, GameSession] = {}
        self._lock = threading.Lock()
        self._persist_dir = Path(persist_dir) if persist_dir else None
        if self._persist_dir:
            self._persist_dir.mkdir(parents=True, exist_ok=True)

    def create(self, **kwargs) -> GameSession:
        session_id = uuid.uuid4().hex[:12]
        session = GameSession(session_id, **kwargs)
        with self._lock:
            self._sessions[session_id] = session
        self.persist(session)
        return session

    def get(self, session_id: str) -> GameSession:
        with self._lock:
            try:
                return self._sessions[session_id]
            except KeyError:
                raise SessionNotFound(session_id) from None

    def persist(self, session: GameSession) -> None:
        if not self._persist_dir:
            return
        path = self._persist_dir / f"{session.id}.json"
        path.write_text(json.dumps(session.snapshot(), indent=2))

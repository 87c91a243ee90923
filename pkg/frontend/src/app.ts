import { ApiError, GameApi } from "./api";
import { renderBoard } from "./board";
import { DODECAHEDRON_WALK, type ReplayScript } from "./replay";
import type { GameKind, SessionState } from "./types";

const FAMILIES = [
  "tetrahedron",
  "octahedron",
  "cube",
  "dodecahedron",
  "icosahedron",
  "complete",
  "cycle",
  "path",
  "hypercube",
];

const SIZED_FAMILIES = new Set(["complete", "cycle", "path", "hypercube"]);

const PHASE_BANNERS: Record<string, string> = {
  placing: "Place your chips, then confirm.",
  sabotage: "Waiting for the debt placement.",
  firing: "Fire vertices or sets to clear the debt.",
  won: "Debt cleared. You win!",
  lost: "No way out. The adversary wins.",
};

/**
 * The whole game client.  Every click becomes an API call and the next
 * render works purely off the server's response; no chip arithmetic happens
 * on this side of the wire.
 */
export class GameApp {
  session: SessionState | null = null;
  pending: number[] = [];
  selection = new Set<number>();
  highlight = new Set<number>();
  message = "";

  private board: SVGSVGElement;
  private banner: HTMLElement;
  private status: HTMLElement;
  private controls: HTMLElement;
  private log: HTMLElement;
  private setup: HTMLFormElement;

  constructor(private root: HTMLElement, private api: GameApi) {
    this.root.innerHTML = `
      <header><h1>Chip-Firing Arcade</h1></header>
      <form id="setup">
        <label>Graph
          <select name="family">
            ${FAMILIES.map((f) => `<option value="${f}">${f}</option>`).join("")}
            <option value="custom">paste JSON</option>
          </select>
        </label>
        <label class="size-field">Size <input name="size" type="number" value="5" min="1"></label>
        <label class="json-field hidden">Graph JSON
          <input name="graph-json" value='{"vertices": 3, "edges": [[0,1],[1,2],[2,0]]}'>
        </label>
        <label>Game
          <select name="kind">
            <option value="gonality">gonality</option>
            <option value="dollar">dollar</option>
          </select>
        </label>
        <label class="budget-field">Chips <input name="budget" type="number" value="3" min="0"></label>
        <label class="chips-field hidden">Start chips <input name="initial" value="[1, -1, 0, 0, 0]"></label>
        <button type="submit" id="new-game">New game</button>
        <button type="button" id="replay-demo">Replay demo</button>
      </form>
      <p id="banner"></p>
      <svg id="board" role="img"></svg>
      <div id="controls"></div>
      <p id="status"></p>
      <details open><summary>Move log</summary><ol id="log"></ol></details>
    `;
    this.board = this.root.querySelector("#board") as SVGSVGElement;
    this.banner = this.root.querySelector("#banner") as HTMLElement;
    this.status = this.root.querySelector("#status") as HTMLElement;
    this.controls = this.root.querySelector("#controls") as HTMLElement;
    this.log = this.root.querySelector("#log") as HTMLElement;
    this.setup = this.root.querySelector("#setup") as HTMLFormElement;
    this.setup.addEventListener("submit", (event) => {
      event.preventDefault();
      void this.startFromForm();
    });
    const kindField = this.setup.elements.namedItem("kind") as HTMLSelectElement;
    kindField.addEventListener("change", () => this.toggleSetupFields());
    const familyField = this.setup.elements.namedItem("family") as HTMLSelectElement;
    familyField.addEventListener("change", () => this.toggleSetupFields());
    const replayButton = this.root.querySelector("#replay-demo") as HTMLButtonElement;
    replayButton.addEventListener("click", () => void this.playReplay());
    this.toggleSetupFields();
    this.render();
  }

  /** Step through a scripted firing walk, one set-fire per beat. */
  async playReplay(
    script: ReplayScript = DODECAHEDRON_WALK,
    pauseMs = 900,
  ): Promise<void> {
    await this.newGame({
      kind: "dollar",
      family: script.family,
      initial_chips: script.initialChips,
    });
    for (const step of script.steps) {
      if (!this.session || this.session.phase !== "firing") break;
      if (pauseMs > 0) {
        await new Promise((resolve) => setTimeout(resolve, pauseMs));
      }
      this.selection = new Set(step);
      this.render();
      await this.fireSelection();
    }
  }

  private toggleSetupFields(): void {
    const kind = (this.setup.elements.namedItem("kind") as HTMLSelectElement).value;
    const family = (this.setup.elements.namedItem("family") as HTMLSelectElement).value;
    this.setup.querySelector(".budget-field")!.classList.toggle("hidden", kind !== "gonality");
    this.setup.querySelector(".chips-field")!.classList.toggle("hidden", kind !== "dollar");
    this.setup.querySelector(".size-field")!.classList.toggle("hidden", !SIZED_FAMILIES.has(family));
    this.setup.querySelector(".json-field")!.classList.toggle("hidden", family !== "custom");
  }

  async startFromForm(): Promise<void> {
    const data = new FormData(this.setup);
    const kind = data.get("kind") as GameKind;
    const family = String(data.get("family"));
    const body: Parameters<GameApi["createSession"]>[0] = { kind };
    if (family === "custom") {
      try {
        body.graph = JSON.parse(String(data.get("graph-json")));
      } catch {
        this.message = 'graph JSON must look like {"vertices": 3, "edges": [[0,1]]}';
        this.render();
        return;
      }
    } else {
      body.family = family;
      if (SIZED_FAMILIES.has(family)) {
        body.size = Number(data.get("size"));
      }
    }
    if (kind === "gonality") {
      body.budget = Number(data.get("budget"));
    } else {
      try {
        body.initial_chips = JSON.parse(String(data.get("initial")));
      } catch {
        this.message = "start chips must be a JSON list like [1, -1, 0]";
        this.render();
        return;
      }
    }
    await this.newGame(body);
  }

  async newGame(body: Parameters<GameApi["createSession"]>[0]): Promise<void> {
    await this.call(async () => {
      this.session = await this.api.createSession(body);
      this.pending = new Array(this.session.graph.vertices).fill(0);
      this.selection.clear();
      this.highlight.clear();
      this.message = "";
    });
  }

  handleVertexClick(vertex: number): void {
    const session = this.session;
    if (!session) return;
    if (session.phase === "placing") {
      const placed = this.pending.reduce((a, b) => a + b, 0);
      if (session.budget !== null && placed >= session.budget) {
        this.pending = new Array(session.graph.vertices).fill(0);
      }
      this.pending[vertex] += 1;
    } else if (session.phase === "sabotage" && session.adversary === "human") {
      void this.call(async () => {
        this.session = await this.api.placeDebt(session.id, vertex);
      });
      return;
    } else if (session.phase === "firing") {
      if (this.selection.has(vertex)) {
        this.selection.delete(vertex);
      } else {
        this.selection.add(vertex);
      }
    } else {
      return;
    }
    this.render();
  }

  async confirmPlacement(): Promise<void> {
    const session = this.session;
    if (!session) return;
    await this.call(async () => {
      this.session = await this.api.place(session.id, [...this.pending]);
      this.pending = new Array(session.graph.vertices).fill(0);
      await this.refreshWhilePending();
    });
  }

  async fireSelection(): Promise<void> {
    const session = this.session;
    if (!session || this.selection.size === 0) return;
    await this.call(async () => {
      this.session = await this.api.fire(session.id, [...this.selection]);
      this.selection.clear();
      this.highlight.clear();
    });
  }

  async requestHint(): Promise<void> {
    const session = this.session;
    if (!session) return;
    await this.call(async () => {
      const hint = await this.api.hint(session.id);
      this.highlight = new Set(hint.vertices);
      this.message =
        hint.kind === "fire_set"
          ? "Hint: fire the highlighted set (the fire cannot reach it)."
          : hint.kind === "unwinnable"
            ? "The whole graph burns: this debt cannot be cleared."
            : hint.detail ?? hint.kind;
    });
  }

  async resign(): Promise<void> {
    const session = this.session;
    if (!session) return;
    await this.call(async () => {
      this.session = await this.api.resign(session.id);
    });
  }

  /** Poll while the engine adversary is still thinking. */
  private async refreshWhilePending(): Promise<void> {
    let guard = 0;
    while (this.session?.adversary_pending && guard < 600) {
      await new Promise((resolve) => setTimeout(resolve, 100));
      this.session = await this.api.getSession(this.session.id);
      guard += 1;
    }
  }

  private async call(action: () => Promise<void>): Promise<void> {
    try {
      this.message = "";
      await action();
    } catch (error) {
      this.message =
        error instanceof ApiError
          ? error.message
          : `${String(error)}; check the server and retry the action`;
    }
    this.render();
  }

  render(): void {
    const session = this.session;
    this.status.textContent = this.message;
    if (!session) {
      this.banner.textContent = "Start a game to bring up a board.";
      this.controls.innerHTML = "";
      return;
    }
    const placed = this.pending.reduce((a, b) => a + b, 0);
    this.banner.textContent =
      session.phase === "placing" && session.budget !== null
        ? `${PHASE_BANNERS.placing} (${placed}/${session.budget} staged)`
        : PHASE_BANNERS[session.phase] ?? session.phase;
    this.banner.dataset.phase = session.phase;

    renderBoard(this.board, session, {
      pending: session.phase === "placing" ? this.pending : undefined,
      selection: this.selection,
      highlight: this.highlight,
      onVertexClick: (v) => this.handleVertexClick(v),
    });

    this.controls.innerHTML = "";
    if (session.phase === "placing") {
      this.addButton("confirm-placement", "Confirm placement", () =>
        void this.confirmPlacement(),
      );
      this.addButton("clear-placement", "Clear", () => {
        this.pending = new Array(session.graph.vertices).fill(0);
        this.render();
      });
    }
    if (session.phase === "firing") {
      this.addButton("fire-selected", `Fire selected (${this.selection.size})`, () =>
        void this.fireSelection(),
      );
      this.addButton("hint", "Hint", () => void this.requestHint());
    }
    if (["placing", "sabotage", "firing"].includes(session.phase)) {
      this.addButton("resign", "Resign", () => void this.resign());
    }

    this.log.innerHTML = "";
    for (const move of session.move_log) {
      const item = document.createElement("li");
      if (move.kind === "place") {
        item.textContent = `placed chips ${JSON.stringify(move.chips)}`;
      } else if (move.kind === "debt") {
        item.textContent = `debt added at vertex ${move.vertex} (${move.by})`;
      } else if (move.kind === "fire") {
        item.textContent = `fired set {${(move.vertices as number[]).join(", ")}}`;
      } else {
        item.textContent = move.kind;
      }
      this.log.appendChild(item);
    }
  }

  private addButton(id: string, label: string, onClick: () => void): void {
    const button = document.createElement("button");
    button.id = id;
    button.type = "button";
    button.textContent = label;
    button.addEventListener("click", onClick);
    this.controls.appendChild(button);
  }
}

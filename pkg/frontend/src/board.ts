import type { SessionState } from "./types";

const SVG_NS = "http://www.w3.org/2000/svg";
const SIZE = 560;
const MARGIN = 40;

export interface BoardOptions {
  /** Chips the player is staging locally during the placing phase. */
  pending?: number[];
  selection?: Set<number>;
  highlight?: Set<number>;
  onVertexClick?: (vertex: number) => void;
}

function scale(point: [number, number]): [number, number] {
  return [
    MARGIN + point[0] * (SIZE - 2 * MARGIN),
    MARGIN + point[1] * (SIZE - 2 * MARGIN),
  ];
}

/**
 * Draw the session's graph and chips into an SVG element.  The board is a
 * pure rendering of server state: the only numbers it shows are the session
 * divisor (plus locally staged chips while placing), and the only behaviour
 * is reporting clicks upward.
 */
export function renderBoard(
  svg: SVGSVGElement,
  state: SessionState,
  options: BoardOptions = {},
): void {
  const pending = options.pending;
  const selection = options.selection ?? new Set<number>();
  const highlight = options.highlight ?? new Set<number>();
  svg.setAttribute("viewBox", `0 0 ${SIZE} ${SIZE}`);
  svg.innerHTML = "";

  const points = state.layout.map(scale);
  const seen = new Map<string, number>();
  for (const [u, v] of state.graph.edges) {
    const key = u < v ? `${u}-${v}` : `${v}-${u}`;
    const copies = seen.get(key) ?? 0;
    seen.set(key, copies + 1);
    const [x1, y1] = points[u];
    const [x2, y2] = points[v];
    const edge = document.createElementNS(SVG_NS, "path");
    // Parallel edges bow outward so every copy stays visible.
    const bend = copies === 0 ? 0 : Math.ceil(copies / 2) * 14 * (copies % 2 ? 1 : -1);
    const mx = (x1 + x2) / 2 + (bend * (y2 - y1)) / Math.hypot(x2 - x1, y2 - y1 || 1);
    const my = (y1 + y2) / 2 - (bend * (x2 - x1)) / Math.hypot(x2 - x1, y2 - y1 || 1);
    edge.setAttribute("d", `M ${x1} ${y1} Q ${mx} ${my} ${x2} ${y2}`);
    edge.setAttribute("class", "edge");
    svg.appendChild(edge);
  }

  state.chips.forEach((serverChips, v) => {
    const chips = pending ? serverChips + pending[v] : serverChips;
    const [x, y] = points[v];
    const group = document.createElementNS(SVG_NS, "g");
    group.setAttribute("data-vertex", String(v));
    const classes = ["vertex"];
    if (selection.has(v)) classes.push("selected");
    if (highlight.has(v)) classes.push("highlighted");
    if (chips < 0) classes.push("debt");
    group.setAttribute("class", classes.join(" "));

    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", String(x));
    circle.setAttribute("cy", String(y));
    circle.setAttribute("r", "16");
    group.appendChild(circle);

    const name = document.createElementNS(SVG_NS, "text");
    name.setAttribute("x", String(x));
    name.setAttribute("y", String(y + 30));
    name.setAttribute("class", "vertex-name");
    name.textContent = state.graph.labels?.[v] ?? String(v);
    group.appendChild(name);

    if (chips !== 0) {
      // Zero balances stay unlabelled, matching the usual convention.
      const badge = document.createElementNS(SVG_NS, "text");
      badge.setAttribute("x", String(x));
      badge.setAttribute("y", String(y + 5));
      badge.setAttribute("class", "chip-badge");
      badge.setAttribute("data-chips", String(chips));
      badge.textContent = String(chips);
      group.appendChild(badge);
    }

    if (options.onVertexClick) {
      group.addEventListener("click", () => options.onVertexClick!(v));
    }
    svg.appendChild(group);
  });
}

/** Sum of the badges currently drawn (used to cross-check against degree). */
export function renderedChipTotal(svg: SVGSVGElement): number {
  let total = 0;
  svg.querySelectorAll(".chip-badge").forEach((badge) => {
    total += Number(badge.getAttribute("data-chips"));
  });
  return total;
}

export type GamePhase = "placing" | "sabotage" | "firing" | "won" | "lost";
export type GameKind = "dollar" | "gonality";

export interface GraphPayload {
  vertices: number;
  edges: [number, number][];
  labels?: string[] | null;
}

export interface MoveRecord {
  kind: string;
  [key: string]: unknown;
}

export interface SessionState {
  id: string;
  kind: GameKind;
  phase: GamePhase;
  adversary: string;
  adversary_pending: boolean;
  budget: number | null;
  family: string | null;
  graph: GraphPayload;
  layout: [number, number][];
  chips: number[];
  degree: number;
  move_log: MoveRecord[];
}

export interface HintPayload {
  kind: string;
  vertices: number[];
  detail?: string | null;
}

export interface CreateSessionBody {
  kind: GameKind;
  family?: string;
  graph?: GraphPayload;
  size?: number;
  parts?: number[];
  budget?: number;
  initial_chips?: number[];
  adversary?: "engine" | "human";
}

/**
 * Scripted demo: the classic six-chip walk on the dodecahedron.  Three chips
 * on a vertex and one on each neighbour, debt on the far side; five set-fires
 * push the pile straight across the board.  Pure data: the server does all
 * the accounting while the board animates its responses.
 */

export interface ReplayScript {
  family: string;
  initialChips: number[];
  steps: number[][];
}

const START = [3, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0];

export const DODECAHEDRON_WALK: ReplayScript = {
  family: "dodecahedron",
  initialChips: START,
  steps: [
    [0],
    [0, 1, 4, 5],
    [0, 1, 2, 3, 4, 5, 6, 7, 13, 14],
    [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 12, 13, 14, 15, 19],
    [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 18, 19],
  ],
};

// Game state: one drag-drop per shift, undo stack, live crossing count.

import {
  COORD_CAP,
  countCrossings,
  crossingsTouchingVertex,
} from "./geometry.js";
import type { Pt, PuzzleDocument } from "./types.js";

export type GameStatus = "playing" | "solved";

export interface HistoryEntry {
  vertex: number;
  from: Pt;
}

export interface GameState {
  puzzle: PuzzleDocument;
  start: Pt[];
  positions: Pt[];
  edges: [number, number][];
  moved: Set<number>;
  history: HistoryEntry[];
  crossings: number;
  status: GameStatus;
}

export function newGame(puzzle: PuzzleDocument): GameState {
  const start = puzzle.vertices.map((v) => ({ x: v.x, y: v.y }));
  const positions = start.map((p) => ({ ...p }));
  const edges = puzzle.edges;
  const crossings = countCrossings(positions, edges);
  return {
    puzzle,
    start,
    positions,
    edges,
    moved: new Set(),
    history: [],
    crossings,
    status: crossings === 0 ? "solved" : "playing",
  };
}

export function moveCount(state: GameState): number {
  return state.moved.size;
}

function samePoint(a: Pt, b: Pt): boolean {
  return a.x === b.x && a.y === b.y;
}

function refreshMoved(state: GameState, vertex: number): void {
  if (samePoint(state.positions[vertex]!, state.start[vertex]!)) {
    state.moved.delete(vertex);
  } else {
    state.moved.add(vertex);
  }
}

/** Crossing count if vertex moved to `to`, via a delta recount of the
 * incident edges only.  Used for live preview while dragging. */
export function previewCrossings(state: GameState, vertex: number, to: Pt): number {
  const before = crossingsTouchingVertex(state.positions, state.edges, vertex);
  const saved = state.positions[vertex]!;
  state.positions[vertex] = to;
  const after = crossingsTouchingVertex(state.positions, state.edges, vertex);
  state.positions[vertex] = saved;
  return state.crossings - before + after;
}

/** Apply one shift.  Returns false (and changes nothing) when the drop is
 * rejected: out of cap, onto an occupied point, or the game is over.
 * Dropping a vertex on its own current position is a no-op. */
export function applyShift(state: GameState, vertex: number, to: Pt): boolean {
  if (state.status !== "playing") return false;
  if (!Number.isInteger(to.x) || !Number.isInteger(to.y)) return false;
  if (Math.abs(to.x) > COORD_CAP || Math.abs(to.y) > COORD_CAP) return false;
  const current = state.positions[vertex];
  if (current === undefined) return false;
  if (samePoint(current, to)) return true; // no-op, not a shift
  for (let u = 0; u < state.positions.length; u++) {
    if (u !== vertex && samePoint(state.positions[u]!, to)) return false;
  }
  state.history.push({ vertex, from: current });
  state.positions[vertex] = { ...to };
  // Full recount on drop cross-checks the drag preview delta.
  state.crossings = countCrossings(state.positions, state.edges);
  refreshMoved(state, vertex);
  state.status = state.crossings === 0 ? "solved" : "playing";
  return true;
}

/** Undo the latest shift, restoring position, counter, and status. */
export function undoMove(state: GameState): boolean {
  const entry = state.history.pop();
  if (entry === undefined) return false;
  state.positions[entry.vertex] = { ...entry.from };
  state.crossings = countCrossings(state.positions, state.edges);
  refreshMoved(state, entry.vertex);
  state.status = state.crossings === 0 ? "solved" : "playing";
  return true;
}

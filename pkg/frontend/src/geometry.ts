// Crossing arithmetic on integer coordinates.
//
// With |coordinate| <= 2^25 every orientation determinant is a difference
// of two products below 2^52, so plain doubles compute it exactly and the
// client's counts match the server bit for bit.

import type { Pt } from "./types.js";

export const COORD_CAP = 1 << 25;

export function orient(p: Pt, q: Pt, r: Pt): number {
  const d = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return d > 0 ? 1 : d < 0 ? -1 : 0;
}

/** Strict proper crossing of open segments; touching configurations are
 * never counted. */
export function properlyCross(a: Pt, b: Pt, c: Pt, d: Pt): boolean {
  const o1 = orient(a, b, c);
  const o2 = orient(a, b, d);
  const o3 = orient(c, d, a);
  const o4 = orient(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

function edgesAdjacent(e: [number, number], f: [number, number]): boolean {
  return e[0] === f[0] || e[0] === f[1] || e[1] === f[0] || e[1] === f[1];
}

/** Exact crossing count over all non-adjacent edge pairs. */
export function countCrossings(positions: Pt[], edges: [number, number][]): number {
  let count = 0;
  for (let i = 0; i < edges.length; i++) {
    const ei = edges[i]!;
    const a = positions[ei[0]]!;
    const b = positions[ei[1]]!;
    for (let j = i + 1; j < edges.length; j++) {
      const ej = edges[j]!;
      if (edgesAdjacent(ei, ej)) continue;
      if (properlyCross(a, b, positions[ej[0]]!, positions[ej[1]]!)) count++;
    }
  }
  return count;
}

/** Crossing pairs that involve at least one edge incident to vertex v;
 * used for cheap recounts while dragging. */
export function crossingsTouchingVertex(
  positions: Pt[],
  edges: [number, number][],
  v: number,
): number {
  let count = 0;
  for (let i = 0; i < edges.length; i++) {
    const ei = edges[i]!;
    if (ei[0] !== v && ei[1] !== v) continue;
    const a = positions[ei[0]]!;
    const b = positions[ei[1]]!;
    for (let j = 0; j < edges.length; j++) {
      if (j === i) continue;
      const ej = edges[j]!;
      // Count each incident-incident pair once.
      if ((ej[0] === v || ej[1] === v) && j < i) continue;
      if (edgesAdjacent(ei, ej)) continue;
      if (properlyCross(a, b, positions[ej[0]]!, positions[ej[1]]!)) count++;
    }
  }
  return count;
}

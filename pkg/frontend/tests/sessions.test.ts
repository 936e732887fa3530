// Replays the recorded play sessions and requires bit-exact agreement with
// the server verdict after every single move: same crossing count, and a
// client move-set size equal to the server's shifts_used.

import { describe, expect, it } from "vitest";

import { applyShift, moveCount, newGame } from "../src/game.js";
import type { PuzzleDocument, VerifyResponse } from "../src/types.js";
import fixture from "./fixtures/sessions.json";

interface RecordedMove {
  v: number;
  x: number;
  y: number;
  server: VerifyResponse;
}

describe("scripted sessions agree with the server", () => {
  it("has at least 10 sessions", () => {
    expect(fixture.sessions.length).toBeGreaterThanOrEqual(10);
  });

  for (const session of fixture.sessions) {
    const name = session.puzzle.name;
    it(`session ${name}: every move matches the server`, () => {
      const doc = structuredClone(session.puzzle) as PuzzleDocument;
      for (const vertex of doc.vertices) {
        expect(Math.abs(vertex.x)).toBeLessThanOrEqual(1 << 25);
        expect(Math.abs(vertex.y)).toBeLessThanOrEqual(1 << 25);
      }
      const state = newGame(doc);
      expect(state.crossings).toBe(doc.meta.crossings);

      for (const move of session.moves as RecordedMove[]) {
        expect(applyShift(state, move.v, { x: move.x, y: move.y })).toBe(true);
        expect(state.crossings).toBe(move.server.crossings);
        expect(moveCount(state)).toBe(move.server.shifts_used);
        expect(state.status === "solved").toBe(move.server.crossing_free);
      }
    });
  }
});

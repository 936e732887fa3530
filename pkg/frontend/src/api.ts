// Thin fetch client for the puzzle service.

import type { Pt, PuzzleDocument, PuzzleSummary, VerifyResponse } from "./types.js";

export class ApiError extends Error {
  constructor(
    message: string,
    public readonly status: number,
  ) {
    super(message);
  }
}

async function getJson<T>(url: string): Promise<T> {
  const response = await fetch(url);
  if (!response.ok) {
    throw new ApiError(`GET ${url} failed: ${response.status}`, response.status);
  }
  return (await response.json()) as T;
}

export class PuzzleApi {
  constructor(private readonly baseUrl: string = "") {}

  listPuzzles(): Promise<PuzzleSummary[]> {
    return getJson(`${this.baseUrl}/api/puzzles`);
  }

  getPuzzle(id: string): Promise<PuzzleDocument> {
    return getJson(`${this.baseUrl}/api/puzzles/${encodeURIComponent(id)}`);
  }

  async verify(id: string, positions: Pt[]): Promise<VerifyResponse> {
    const body = {
      positions: positions.map((p, v) => ({ id: v, x: p.x, y: p.y })),
    };
    const url = `${this.baseUrl}/api/puzzles/${encodeURIComponent(id)}/verify`;
    const response = await fetch(url, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!response.ok) {
      const detail = await response.text().catch(() => "");
      throw new ApiError(`verify failed: ${response.status} ${detail}`, response.status);
    }
    return (await response.json()) as VerifyResponse;
  }
}

// SVG board, drag handling, and HUD wiring for the planarity game.

import { PuzzleApi } from "./api.js";
import { applyShift, moveCount, newGame, previewCrossings, undoMove } from "./game.js";
import type { GameState } from "./game.js";
import type { Pt, PuzzleDocument, PuzzleSummary } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const BOARD_SIZE = 720;

function apiBase(): string {
  const param = new URLSearchParams(window.location.search).get("api");
  return param ?? "http://127.0.0.1:8000";
}

const api = new PuzzleApi(apiBase());

interface ViewTransform {
  scale: number;
  offsetX: number;
  offsetY: number;
}

function fitTransform(points: Pt[]): ViewTransform {
  const xs = points.map((p) => p.x);
  const ys = points.map((p) => p.y);
  const minX = Math.min(...xs);
  const maxX = Math.max(...xs);
  const minY = Math.min(...ys);
  const maxY = Math.max(...ys);
  const span = Math.max(maxX - minX, maxY - minY, 1);
  const scale = (BOARD_SIZE * 0.84) / span;
  return {
    scale,
    offsetX: BOARD_SIZE / 2 - scale * (minX + maxX) / 2,
    offsetY: BOARD_SIZE / 2 + scale * (minY + maxY) / 2,
  };
}

function toScreen(t: ViewTransform, p: Pt): Pt {
  return { x: t.offsetX + t.scale * p.x, y: t.offsetY - t.scale * p.y };
}

function toWorld(t: ViewTransform, p: Pt): Pt {
  return {
    x: Math.round((p.x - t.offsetX) / t.scale),
    y: Math.round((t.offsetY - p.y) / t.scale),
  };
}

class App {
  private readonly list = document.getElementById("puzzle-list") as HTMLUListElement;
  private readonly board = document.getElementById("board") as unknown as SVGSVGElement;
  private readonly status = document.getElementById("status") as HTMLDivElement;
  private readonly hud = document.getElementById("hud") as HTMLDivElement;
  private readonly banner = document.getElementById("banner") as HTMLDivElement;

  private state: GameState | null = null;
  private view: ViewTransform | null = null;
  private drag: { vertex: number; preview: number } | null = null;
  private requestStamp = 0;

  async start(): Promise<void> {
    document.getElementById("undo")!.addEventListener("click", () => this.onUndo());
    document.getElementById("submit")!.addEventListener("click", () => void this.onSubmit());
    try {
      const puzzles = await api.listPuzzles();
      this.renderList(puzzles);
    } catch (err) {
      this.showBanner(`Could not reach the puzzle service: ${String(err)}`);
    }
  }

  private renderList(puzzles: PuzzleSummary[]): void {
    this.list.replaceChildren();
    for (const p of puzzles) {
      const item = document.createElement("li");
      const link = document.createElement("a");
      link.href = "#";
      link.textContent = `${p.name} — ${p.n} vertices, ${p.crossings} crossings`;
      link.addEventListener("click", (event) => {
        event.preventDefault();
        void this.loadPuzzle(p.id);
      });
      item.appendChild(link);
      this.list.appendChild(item);
    }
  }

  async loadPuzzle(id: string): Promise<void> {
    const stamp = ++this.requestStamp;
    try {
      const doc = await api.getPuzzle(id);
      if (stamp !== this.requestStamp) return; // stale response
      this.setGame(doc);
    } catch (err) {
      this.showBanner(`Failed to load puzzle ${id}: ${String(err)}`);
    }
  }

  setGame(doc: PuzzleDocument): void {
    this.state = newGame(doc);
    this.view = fitTransform(this.state.start);
    this.hideBanner();
    this.renderBoard();
    this.renderHud("");
  }

  private renderBoard(): void {
    const state = this.state;
    const view = this.view;
    if (!state || !view) return;
    this.board.replaceChildren();

    for (const [u, v] of state.edges) {
      const a = toScreen(view, state.positions[u]!);
      const b = toScreen(view, state.positions[v]!);
      const line = document.createElementNS(SVG_NS, "line");
      line.setAttribute("x1", String(a.x));
      line.setAttribute("y1", String(a.y));
      line.setAttribute("x2", String(b.x));
      line.setAttribute("y2", String(b.y));
      line.setAttribute("class", "edge");
      this.board.appendChild(line);
    }
    state.positions.forEach((p, v) => {
      const spot = toScreen(view, p);
      const circle = document.createElementNS(SVG_NS, "circle");
      circle.setAttribute("cx", String(spot.x));
      circle.setAttribute("cy", String(spot.y));
      circle.setAttribute("r", "9");
      circle.setAttribute(
        "class",
        state.moved.has(v) ? "vertex moved" : "vertex",
      );
      circle.addEventListener("pointerdown", (event) => this.onGrab(event, v));
      this.board.appendChild(circle);
    });
  }

  private renderHud(serverLine: string): void {
    const state = this.state;
    if (!state) return;
    const meta = state.puzzle.meta;
    const live = this.drag ? this.drag.preview : state.crossings;
    const solved = state.status === "solved" ? " — solved!" : "";
    this.hud.textContent =
      `crossings: ${live}   moves: ${moveCount(state)}   ` +
      `par: ${meta.shift_lower}..${meta.shift_upper}${solved}`;
    this.status.textContent = serverLine;
  }

  private boardPoint(event: PointerEvent): Pt {
    const rect = this.board.getBoundingClientRect();
    return {
      x: ((event.clientX - rect.left) / rect.width) * BOARD_SIZE,
      y: ((event.clientY - rect.top) / rect.height) * BOARD_SIZE,
    };
  }

  private onGrab(event: PointerEvent, vertex: number): void {
    const state = this.state;
    const view = this.view;
    if (!state || !view || state.status !== "playing") return;
    event.preventDefault();
    this.drag = { vertex, preview: state.crossings };

    const onMove = (move: PointerEvent) => {
      const world = toWorld(view, this.boardPoint(move));
      const drag = this.drag;
      if (!drag) return;
      drag.preview = previewCrossings(state, vertex, world);
      const circle = this.vertexCircle(vertex);
      if (circle) {
        const spot = toScreen(view, world);
        circle.setAttribute("cx", String(spot.x));
        circle.setAttribute("cy", String(spot.y));
      }
      this.renderHud("");
    };
    const onUp = (up: PointerEvent) => {
      window.removeEventListener("pointermove", onMove);
      window.removeEventListener("pointerup", onUp);
      const world = toWorld(view, this.boardPoint(up));
      this.drag = null;
      if (!applyShift(state, vertex, world)) {
        this.showBanner("That spot is taken or out of range; move undone.");
      } else {
        this.hideBanner();
      }
      this.renderBoard();
      this.renderHud("");
    };
    window.addEventListener("pointermove", onMove);
    window.addEventListener("pointerup", onUp);
  }

  private vertexCircle(vertex: number): SVGCircleElement | null {
    const circles = this.board.querySelectorAll("circle");
    return (circles[vertex] as SVGCircleElement | undefined) ?? null;
  }

  private onUndo(): void {
    if (!this.state) return;
    undoMove(this.state);
    this.renderBoard();
    this.renderHud("");
  }

  private async onSubmit(): Promise<void> {
    const state = this.state;
    if (!state) return;
    const stamp = ++this.requestStamp;
    try {
      const verdict = await api.verify(state.puzzle.name, state.positions);
      if (stamp !== this.requestStamp) return;
      const agree = verdict.crossings === state.crossings ? "" : "  (MISMATCH!)";
      this.renderHud(
        `server: crossings=${verdict.crossings} ` +
          `crossing_free=${verdict.crossing_free} shifts_used=${verdict.shifts_used}${agree}`,
      );
    } catch (err) {
      this.showBanner(`Verification failed: ${String(err)}`);
    }
  }

  private showBanner(message: string): void {
    this.banner.textContent = message;
    this.banner.style.display = "block";
  }

  private hideBanner(): void {
    this.banner.style.display = "none";
  }
}

void new App().start();

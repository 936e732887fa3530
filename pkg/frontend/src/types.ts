// Types mirroring the puzzle service's JSON dialect.

export interface VertexPoint {
  id: number;
  x: number;
  y: number;
}

export interface PuzzleMeta {
  epsilon: number;
  crossings: number;
  nu: number | null;
  shift_lower: number;
  shift_upper: number;
  family: string;
  seed: number;
}

export interface PuzzleDocument {
  format: string;
  name: string;
  vertices: VertexPoint[];
  edges: [number, number][];
  reference_layout?: VertexPoint[];
  meta: PuzzleMeta;
}

export interface PuzzleSummary {
  id: string;
  name: string;
  n: number;
  m: number;
  crossings: number;
  shift_lower: number;
  shift_upper: number;
}

export interface VerifyResponse {
  crossings: number;
  crossing_free: boolean;
  shifts_used: number;
}

export interface Pt {
  x: number;
  y: number;
}

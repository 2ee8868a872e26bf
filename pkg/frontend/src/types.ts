// Wire types mirroring the session API JSON. The client never computes
// algebra: every polynomial string below originates from the server.

export interface PathData {
  i: number;
  j: number;
  k: number;
  mult: number;
}

export interface QuiverData {
  n: number;
  m: number;
  b: number[][];
  paths: PathData[];
  frozen: number[];
}

export interface ClusterEntry {
  poly: unknown;
  rendered: string;
}

export interface SessionState {
  id: string;
  quiver: QuiverData;
  cluster: ClusterEntry[];
  weights: number[] | null;
  mutable: boolean[];
  history: number[];
  undo_depth: number;
  names: { even: string[]; odd: string[] };
}

export interface Exchange {
  vertex: number;
  numerator: unknown;
  rendered: string;
  new_value: string;
}

export interface MutateResponse {
  state: SessionState;
  exchange: Exchange;
}

export interface CreateResponse {
  id: string;
  state: SessionState;
}

export interface ApiErrorBody {
  error: string;
}

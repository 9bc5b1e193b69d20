export interface ParamInfo {
  name: string;
  required: boolean;
  integer: boolean;
  default?: number | string;
  placeholder?: number;
}

export interface AlgorithmInfo {
  id: string;
  kind: "graph" | "clustering";
  params: ParamInfo[];
}

export interface GraphResult {
  type: "graph";
  n: number;
  edges: [number, number][];
}

export interface ClusteringResult {
  type: "clustering";
  labels: number[];
  noise: number;
  centers?: [number, number][];
  medoids?: number[];
}

export type ComputeResult = GraphResult | ClusteringResult;

export interface ServiceError {
  error: string;
  detail: string;
}

/** A point in drawing units (y grows upward, Ipe-style). */
export interface DrawingPoint {
  x: number;
  y: number;
}

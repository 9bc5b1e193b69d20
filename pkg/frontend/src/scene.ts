import { NOISE_COLOR_INDEX, colorForCluster } from "./palette.js";
import type { ComputeResult, DrawingPoint } from "./types.js";

export interface SceneMark {
  x: number;
  y: number;
  color: string;
  symbol: "disk" | "cross";
}

export interface SceneSegment {
  x1: number;
  y1: number;
  x2: number;
  y2: number;
  color: string;
}

export interface Scene {
  marks: SceneMark[];
  segments: SceneSegment[];
}

/**
 * Pure display list in drawing coordinates (y up). Graph results become
 * segments over black disks; clustering results color-code the disks by
 * label and draw noise as gray crosses. The canvas painter applies the
 * y-flip at the boundary.
 */
export function buildScene(points: DrawingPoint[], result: ComputeResult | null): Scene {
  const marks: SceneMark[] = points.map((p) => ({
    x: p.x,
    y: p.y,
    color: colorForCluster(0),
    symbol: "disk",
  }));
  const segments: SceneSegment[] = [];

  if (result?.type === "graph") {
    for (const [i, j] of result.edges) {
      segments.push({
        x1: points[i].x,
        y1: points[i].y,
        x2: points[j].x,
        y2: points[j].y,
        color: colorForCluster(0),
      });
    }
  } else if (result?.type === "clustering") {
    result.labels.forEach((label, i) => {
      if (i >= marks.length) return;
      if (label === result.noise) {
        marks[i].color = colorForCluster(NOISE_COLOR_INDEX);
        marks[i].symbol = "cross";
      } else {
        marks[i].color = colorForCluster(label);
      }
    });
  }
  return { marks, segments };
}

import { ApiClient, ApiError } from "./api.js";
import { RECOMPUTE_DEBOUNCE_MS, debounce } from "./debounce.js";
import type { AlgorithmInfo, ComputeResult, DrawingPoint, ParamInfo } from "./types.js";

export interface PanelField {
  name: string;
  required: boolean;
  integer: boolean;
  value: number | "";
  placeholder?: number;
}

export interface EditorState {
  points: DrawingPoint[];
  algorithms: AlgorithmInfo[];
  selected: string | null;
  params: Record<string, number | "">;
  lastResult: ComputeResult | null;
  pending: boolean;
  stale: boolean;
  status: string;
  hint: string;
}

const MIN_POINTS_FOR_COMPUTE = 2;

/**
 * Editor store: owns all UI state and talks to the compute service. The UI
 * never computes geometry itself; every displayed edge or label comes from a
 * service response. Point edits debounce into a single recompute and only
 * the newest in-flight request may apply its result.
 */
export class EditorStore {
  state: EditorState = {
    points: [],
    algorithms: [],
    selected: null,
    params: {},
    lastResult: null,
    pending: false,
    stale: false,
    status: "",
    hint: "",
  };

  private listeners: (() => void)[] = [];
  private requestSeq = 0;
  private scheduleRecompute: () => void;

  constructor(private client: ApiClient, debounceMs: number = RECOMPUTE_DEBOUNCE_MS) {
    this.scheduleRecompute = debounce(() => void this.recomputeNow(), debounceMs);
  }

  subscribe(listener: () => void): void {
    this.listeners.push(listener);
  }

  private emit(): void {
    for (const fn of this.listeners) fn();
  }

  async loadCatalog(): Promise<void> {
    this.state.algorithms = await this.client.algorithms();
    this.emit();
  }

  /** Append a point; exact duplicate coordinates are rejected with a hint. */
  placePoint(x: number, y: number): boolean {
    if (this.state.points.some((p) => p.x === x && p.y === y)) {
      this.state.hint = "a point already sits at these exact coordinates";
      this.emit();
      return false;
    }
    this.state.points.push({ x, y });
    this.state.hint = "";
    this.touch();
    return true;
  }

  removePoint(index: number): void {
    if (index < 0 || index >= this.state.points.length) return;
    this.state.points.splice(index, 1);
    this.touch();
  }

  /** Index of the point within `radius` of (x, y), closest first, or -1. */
  pointNear(x: number, y: number, radius: number): number {
    let best = -1;
    let bestD2 = radius * radius;
    this.state.points.forEach((p, i) => {
      const d2 = (p.x - x) ** 2 + (p.y - y) ** 2;
      if (d2 <= bestD2) {
        best = i;
        bestD2 = d2;
      }
    });
    return best;
  }

  selectAlgorithm(id: string): void {
    const info = this.algorithmInfo(id);
    if (!info) return;
    this.state.selected = id;
    this.state.params = {};
    for (const param of info.params) {
      this.state.params[param.name] = this.defaultValue(info, param);
    }
    this.touch();
  }

  private defaultValue(info: AlgorithmInfo, param: ParamInfo): number | "" {
    if (typeof param.default === "number") return param.default;
    if (typeof param.default === "string") {
      // dependent default: mirrors the named sibling parameter
      const sibling = info.params.find((p) => p.name === param.default);
      if (sibling && typeof sibling.default === "number") return sibling.default;
    }
    return "";
  }

  setParam(name: string, value: number | ""): void {
    this.state.params[name] = value;
    this.touch();
  }

  algorithmInfo(id: string | null = this.state.selected): AlgorithmInfo | undefined {
    return this.state.algorithms.find((a) => a.id === id);
  }

  /** Parameter panel model for the selected algorithm. */
  panelFields(): PanelField[] {
    const info = this.algorithmInfo();
    if (!info) return [];
    return info.params.map((p) => ({
      name: p.name,
      required: p.required,
      integer: p.integer,
      value: this.state.params[p.name] ?? "",
      placeholder: p.placeholder,
    }));
  }

  /** All parameters carry values and there are enough points to ask for. */
  canCompute(): boolean {
    const info = this.algorithmInfo();
    if (!info || this.state.points.length < MIN_POINTS_FOR_COMPUTE) return false;
    return info.params.every((p) => this.state.params[p.name] !== "");
  }

  missingParams(): string[] {
    const info = this.algorithmInfo();
    if (!info) return [];
    return info.params.filter((p) => this.state.params[p.name] === "").map((p) => p.name);
  }

  private touch(): void {
    this.state.stale = true;
    if (this.canCompute()) {
      this.scheduleRecompute();
    } else {
      this.state.lastResult = null;
      this.state.stale = false; // nothing displayed, nothing stale
    }
    this.emit();
  }

  private numericParams(): Record<string, number> {
    const out: Record<string, number> = {};
    for (const [name, value] of Object.entries(this.state.params)) {
      if (value !== "") out[name] = value;
    }
    return out;
  }

  async recomputeNow(): Promise<void> {
    if (!this.canCompute() || this.state.selected === null) return;
    const seq = ++this.requestSeq;
    this.state.pending = true;
    this.state.status = "";
    this.emit();
    try {
      const result = await this.client.compute(
        this.state.points.slice(),
        this.state.selected,
        this.numericParams()
      );
      if (seq !== this.requestSeq) return; // a newer request superseded us
      this.state.lastResult = result;
      this.state.stale = false;
      this.state.status = "";
    } catch (err) {
      if (seq !== this.requestSeq) return;
      if (err instanceof ApiError) {
        this.state.status = `${err.envelope.error}: ${err.envelope.detail}`;
      } else if ((err as Error).name !== "AbortError") {
        this.state.status = String(err);
      } else {
        return;
      }
      this.state.lastResult = null;
    } finally {
      if (seq === this.requestSeq) {
        this.state.pending = false;
        this.emit();
      }
    }
  }

  exportBlocked(): boolean {
    return this.state.pending || this.state.stale || this.state.lastResult === null;
  }

  /** Server-rendered Ipe XML or SVG for the current state. */
  async exportDrawing(format: "ipe" | "svg"): Promise<string> {
    if (this.exportBlocked() || this.state.selected === null) {
      throw new Error("export blocked until the displayed result is current");
    }
    const result = await this.client.compute(
      this.state.points.slice(),
      this.state.selected,
      this.numericParams(),
      format
    );
    const rendering = format === "ipe" ? result.ipe : result.svg;
    if (rendering === undefined) throw new Error(`service returned no ${format} rendering`);
    return rendering;
  }

  /** Points as CSV, one x,y per line; re-importing gives the same list. */
  exportCsv(): string {
    return this.state.points.map((p) => `${p.x},${p.y}`).join("\n") + "\n";
  }
}

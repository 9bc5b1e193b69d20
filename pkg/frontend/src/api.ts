import type { AlgorithmInfo, ComputeResult, DrawingPoint, ServiceError } from "./types.js";

export class ApiError extends Error {
  constructor(public status: number, public envelope: ServiceError) {
    super(`${envelope.error}: ${envelope.detail}`);
  }
}

/**
 * Thin client for the compute service. All geometry lives server-side; the
 * UI only posts points and draws what comes back. At most one compute
 * request is in flight: issuing a new one aborts the previous (newest wins).
 */
export class ApiClient {
  private inflight: AbortController | null = null;

  constructor(private baseUrl: string, private fetchFn: typeof fetch = fetch) {}

  async algorithms(): Promise<AlgorithmInfo[]> {
    const resp = await this.fetchFn(`${this.baseUrl}/api/algorithms`);
    const body = await resp.json();
    if (!resp.ok) throw new ApiError(resp.status, body as ServiceError);
    return (body as { algorithms: AlgorithmInfo[] }).algorithms;
  }

  async compute(
    points: DrawingPoint[],
    algorithm: string,
    params: Record<string, number>,
    render?: "svg" | "ipe"
  ): Promise<ComputeResult & { svg?: string; ipe?: string }> {
    this.inflight?.abort();
    const controller = new AbortController();
    this.inflight = controller;
    const query = render ? `?render=${render}` : "";
    try {
      const resp = await this.fetchFn(`${this.baseUrl}/api/compute${query}`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify({
          points: points.map((p) => [p.x, p.y]),
          algorithm,
          params,
        }),
        signal: controller.signal,
      });
      const body = await resp.json();
      if (!resp.ok) throw new ApiError(resp.status, body as ServiceError);
      return body as ComputeResult & { svg?: string; ipe?: string };
    } finally {
      if (this.inflight === controller) this.inflight = null;
    }
  }
}

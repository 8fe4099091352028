/** Typed client for the netmine JSON API. All analysis numbers come from
 * the server; the client never computes scores itself. */

export interface NetworkNode {
  id: number;
  [attribute: string]: unknown;
}

export interface NetworkLink {
  source: number;
  target: number;
  [attribute: string]: unknown;
}

export interface NetworkPayload {
  directed: boolean;
  nodes: NetworkNode[];
  links: NetworkLink[];
}

export interface MetricResult {
  values?: number[];
  hub?: number[];
  authority?: number[];
  pairs?: [number, number, number][];
  converged?: boolean;
  [key: string]: unknown;
}

export interface CommunityResult {
  labels: number[];
  k: number;
  merges?: [number, number, number][];
  memberships?: number[][];
}

export interface AlgorithmListing {
  metrics: string[];
  communities: string[];
  linkpred: string[];
  layouts: string[];
}

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

type Json = Record<string, unknown>;

export class NetmineClient {
  constructor(readonly base: string = "") {}

  private async request<T>(method: string, path: string, body?: Json): Promise<T> {
    const response = await fetch(this.base + path, {
      method,
      headers: body ? { "Content-Type": "application/json" } : undefined,
      body: body ? JSON.stringify(body) : undefined,
    });
    const text = await response.text();
    let payload: unknown = null;
    try {
      payload = text ? JSON.parse(text) : null;
    } catch {
      payload = text;
    }
    if (response.status === 202) {
      const job = (payload as { job: string }).job;
      return this.poll<T>(job);
    }
    if (!response.ok) {
      const message =
        payload && typeof payload === "object" && "error" in (payload as Json)
          ? String((payload as Json).error)
          : `HTTP ${response.status}`;
      throw new ApiError(response.status, message);
    }
    return payload as T;
  }

  private async poll<T>(job: string, intervalMs = 150): Promise<T> {
    for (;;) {
      const state = await this.request<{ status: string; result?: T; error?: string }>(
        "GET",
        `/api/jobs/${job}`,
      );
      if (state.status === "done") return state.result as T;
      if (state.status === "error") throw new ApiError(500, state.error ?? "job failed");
      await new Promise((resolve) => setTimeout(resolve, intervalMs));
    }
  }

  getNetwork(): Promise<NetworkPayload> {
    return this.request("GET", "/api/network");
  }

  uploadContent(content: string, format?: string): Promise<{ nodes: number; links: number }> {
    return this.request("POST", "/api/network", format ? { content, format } : { content });
  }

  uploadPath(path: string): Promise<{ nodes: number; links: number }> {
    return this.request("POST", "/api/network", { path });
  }

  listAlgorithms(): Promise<AlgorithmListing> {
    return this.request("GET", "/api/algorithms");
  }

  runMetric(name: string, params: Json = {}): Promise<MetricResult> {
    return this.request("POST", "/api/metric", { name, params });
  }

  runCommunities(name: string, params: Json = {}): Promise<CommunityResult> {
    return this.request("POST", "/api/communities", { name, params });
  }

  runLinkpred(name: string, params: Json = {}, top = 20): Promise<MetricResult> {
    return this.request("POST", "/api/linkpred", { name, params, top });
  }

  runLayout(name: string, params: Json = {}): Promise<{ positions: [number, number][] }> {
    return this.request("POST", "/api/layout", { name, params });
  }

  savePositions(positions: [number, number][]): Promise<{ stored: number }> {
    return this.request("POST", "/api/positions", { positions });
  }

  async renderSvg(styles: Json[] = []): Promise<string> {
    const response = await fetch(this.base + "/api/render", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ styles }),
    });
    if (!response.ok) {
      throw new ApiError(response.status, await response.text());
    }
    return response.text();
  }
}

/** Thin typed client for the fairmeta service; every call is one endpoint. */

import type { ApiErrorBody, Decision, ServiceInfo, SessionState } from './types.js';

export class ApiError extends Error {
  readonly status: number;
  readonly code: string;
  readonly findings: string[];

  constructor(status: number, body: ApiErrorBody) {
    super(body.message);
    this.status = status;
    this.code = body.code;
    this.findings = body.findings ?? [];
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  private readonly base: string;
  private readonly fetchImpl: FetchLike;

  constructor(baseUrl: string, fetchImpl?: FetchLike) {
    this.base = baseUrl.replace(/\/+$/, '');
    this.fetchImpl = fetchImpl ?? ((input, init) => fetch(input, init));
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method, headers: { 'Content-Type': 'application/json' } };
    if (body !== undefined) {
      init.body = JSON.stringify(body);
    }
    const response = await this.fetchImpl(this.base + path, init);
    const payload = await response.json().catch(() => null);
    if (!response.ok) {
      const error: ApiErrorBody =
        payload && typeof payload.code === 'string'
          ? payload
          : { code: 'unexpected_error', message: `HTTP ${response.status}` };
      throw new ApiError(response.status, error);
    }
    return payload as T;
  }

  getConfig(): Promise<ServiceInfo> {
    return this.request('GET', '/config');
  }

  createSession(baseShapes?: string): Promise<SessionState> {
    return this.request('POST', '/sessions', baseShapes ? { base_shapes: baseShapes } : {});
  }

  getSession(id: string): Promise<SessionState> {
    return this.request('GET', `/sessions/${encodeURIComponent(id)}`);
  }

  extendSchema(id: string, instruction: string): Promise<SessionState> {
    return this.request('POST', `/sessions/${encodeURIComponent(id)}/schema/extend`, { instruction });
  }

  correctSchema(id: string, instruction: string): Promise<SessionState> {
    return this.request('POST', `/sessions/${encodeURIComponent(id)}/schema/correct`, { instruction });
  }

  createInstance(id: string, instruction: string): Promise<SessionState> {
    return this.request('POST', `/sessions/${encodeURIComponent(id)}/instance`, { instruction });
  }

  createPolicy(id: string, instruction: string): Promise<SessionState> {
    return this.request('POST', `/sessions/${encodeURIComponent(id)}/policy`, { instruction });
  }

  explain(id: string): Promise<SessionState> {
    return this.request('POST', `/sessions/${encodeURIComponent(id)}/explain`, {});
  }

  evaluatePolicy(id: string, country: string, timestamp: string, action = 'use'): Promise<Decision> {
    return this.request('POST', `/sessions/${encodeURIComponent(id)}/policy/eval`, {
      country,
      timestamp,
      action,
    });
  }

  exportUrl(id: string): string {
    return `${this.base}/sessions/${encodeURIComponent(id)}/export`;
  }
}

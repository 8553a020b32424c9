import { describe, expect, it } from 'vitest';

import { ApiClient, ApiError } from '../src/api.js';
import type { SessionState } from '../src/types.js';
import { FakeService, loadFixture } from './helpers.js';

describe('ApiClient', () => {
  it('strips trailing slashes from the base url', async () => {
    const service = new FakeService();
    const client = new ApiClient('http://fake///', service.fetch);
    await client.getConfig();
    expect(service.calls[0].path).toBe('/config');
  });

  it('returns typed payloads', async () => {
    const service = new FakeService();
    const client = new ApiClient('http://fake', service.fetch);
    const info = await client.getConfig();
    expect(info.mode).toBe('fixture');
    expect(info.prompts_leave_machine).toBe(false);
    const session = await client.createSession();
    expect(session.tasks_done).toEqual([]);
    expect(session.artifacts.shapes_turtle).toContain('@prefix');
  });

  it('throws ApiError carrying the machine code', async () => {
    const service = new FakeService();
    const client = new ApiClient('http://fake', service.fetch);
    const session = await client.createSession();
    let caught: unknown;
    try {
      await client.createPolicy(session.id, 'too early');
    } catch (error) {
      caught = error;
    }
    expect(caught).toBeInstanceOf(ApiError);
    expect((caught as ApiError).code).toBe('task_order_violation');
    expect((caught as ApiError).status).toBe(409);
  });

  it('404s on unknown sessions with session_not_found', async () => {
    const service = new FakeService();
    const client = new ApiClient('http://fake', service.fetch);
    await expect(client.getSession('nope')).rejects.toMatchObject({ code: 'session_not_found' });
  });

  it('encodes session ids in urls and builds the export url', async () => {
    const service = new FakeService();
    const client = new ApiClient('http://fake', service.fetch);
    await client.getSession('we ird/../id').catch(() => undefined);
    expect(service.calls[0].path).toContain('we%20ird');
    expect(client.exportUrl('abc')).toBe('http://fake/sessions/abc/export');
  });

  it('recorded session payloads expose the panes the UI renders', () => {
    const done = loadFixture<SessionState>('after_explain.json');
    expect(done.artifacts.shapes_turtle).toBeTruthy();
    expect(done.artifacts.instance_turtle).toBeTruthy();
    expect(done.artifacts.policy_turtle).toBeTruthy();
    expect(done.artifacts.explanation_text).toBeTruthy();
    expect(done.artifacts.diagram_text).toContain('@startuml');
    expect(done.transcripts.schema.messages[0].role).toBe('system');
    expect(done.shape_delta?.removed.some((d) => d.path.includes('preferredNameForThePerson'))).toBe(true);
  });
});

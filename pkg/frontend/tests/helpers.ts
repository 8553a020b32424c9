/** Test scaffolding: a fake service that replays recorded API payloads.
 *
 * The JSON files under tests/fixtures/ are actual responses captured from
 * the fixture-mode service, so these tests exercise the real wire format.
 */

import { readFileSync } from 'node:fs';
import { dirname, join } from 'node:path';
import { fileURLToPath } from 'node:url';

import type { FetchLike } from '../src/api.js';
import type { SessionState } from '../src/types.js';

const FIXTURES = join(dirname(fileURLToPath(import.meta.url)), 'fixtures');

export function loadFixture<T>(name: string): T {
  return JSON.parse(readFileSync(join(FIXTURES, name), 'utf-8')) as T;
}

function jsonResponse(payload: unknown, status = 200): Response {
  return new Response(JSON.stringify(payload), {
    status,
    headers: { 'Content-Type': 'application/json' },
  });
}

export interface FakeServiceOptions {
  /** artificial latency hook, resolved before each response */
  gate?: () => Promise<void>;
}

export class FakeService {
  readonly calls: { method: string; path: string; body: unknown }[] = [];
  private done = new Set<string>();
  private sessionId: string;
  private readonly gate?: () => Promise<void>;

  constructor(options: FakeServiceOptions = {}) {
    this.gate = options.gate;
    this.sessionId = loadFixture<SessionState>('session_created.json').id;
  }

  get fetch(): FetchLike {
    return async (input, init) => {
      const method = init?.method ?? 'GET';
      const url = new URL(input, 'http://fake');
      const path = url.pathname;
      const body = init?.body ? JSON.parse(String(init.body)) : undefined;
      this.calls.push({ method, path, body });
      if (this.gate) {
        await this.gate();
      }
      return this.route(method, path);
    };
  }

  private latest(): SessionState {
    if (this.done.has('explain')) return loadFixture('after_explain.json');
    if (this.done.has('policy')) return loadFixture('after_policy.json');
    if (this.done.has('instance')) return loadFixture('after_instance.json');
    if (this.done.has('correct')) return loadFixture('after_correct.json');
    if (this.done.has('schema')) return loadFixture('after_extend.json');
    return loadFixture('session_created.json');
  }

  private route(method: string, path: string): Response {
    if (method === 'GET' && path === '/config') {
      return jsonResponse(loadFixture('config.json'));
    }
    if (method === 'POST' && path === '/sessions') {
      return jsonResponse(loadFixture('session_created.json'), 201);
    }
    const match = path.match(/^\/sessions\/([^/]+)(\/.*)?$/);
    if (!match) {
      return jsonResponse({ code: 'unexpected_error', message: 'no route' }, 500);
    }
    const [, id, rest = ''] = match;
    if (id !== this.sessionId) {
      return jsonResponse(loadFixture('error_not_found.json'), 404);
    }
    if (method === 'GET' && !rest) {
      return jsonResponse(this.latest());
    }
    switch (rest) {
      case '/schema/extend':
        this.done.add('schema');
        return jsonResponse(loadFixture('after_extend.json'));
      case '/schema/correct':
        this.done.add('correct');
        return jsonResponse(loadFixture('after_correct.json'));
      case '/instance':
        if (!this.done.has('schema')) {
          return jsonResponse(loadFixture('error_task_order.json'), 409);
        }
        this.done.add('instance');
        return jsonResponse(loadFixture('after_instance.json'));
      case '/policy':
        if (!this.done.has('instance')) {
          return jsonResponse(loadFixture('error_task_order.json'), 409);
        }
        this.done.add('policy');
        return jsonResponse(loadFixture('after_policy.json'));
      case '/explain':
        if (!this.done.has('policy')) {
          return jsonResponse(loadFixture('error_task_order.json'), 409);
        }
        this.done.add('explain');
        return jsonResponse(loadFixture('after_explain.json'));
      case '/policy/eval': {
        const lastBody = this.calls[this.calls.length - 1].body as { country?: string };
        const fixture = lastBody?.country === 'DE' ? 'whatif_permit.json' : 'whatif_deny.json';
        return jsonResponse(loadFixture(fixture));
      }
      default:
        return jsonResponse({ code: 'unexpected_error', message: `no route ${rest}` }, 500);
    }
  }
}

export const SCENARIO_INSTRUCTIONS = {
  extend:
    'Please extend the SHACL shapes given below such that I can also describe digital versions of paintings with them.',
  correct:
    'Please do not include the preferred name of the painter, and consider that the dateOfProduction should be of type xsd:dateTime.',
  instance:
    'Please create an instance of it for the painting "Der Wanderer über dem Nebelmeer" by Caspar David Friedrich.',
  policy: 'create an ODRL policy that allows the dataset to be used within Germany until 2024-05-10',
};

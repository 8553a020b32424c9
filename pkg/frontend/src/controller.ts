/**
 * Workflow state machine behind the four-step curator flow.
 *
 * Holds no business logic: every mutation is one API call, and the whole
 * view state is rebuilt from the session payload the service returns, so
 * a page reload reconstructs the identical view from GET /sessions/{id}.
 */

import { ApiClient, ApiError } from './api.js';
import { stepDone, stepEnabled } from './render.js';
import type { Decision, ServiceInfo, SessionState, StepId } from './types.js';
import { STEP_ORDER } from './types.js';

export interface ErrorView {
  code: string;
  message: string;
  findings?: string[];
}

export interface ViewState {
  info: ServiceInfo | null;
  session: SessionState | null;
  active: StepId;
  pending: boolean;
  error: ErrorView | null;
  whatIf: Decision | null;
}

type Listener = (state: ViewState) => void;

export class WorkflowController {
  private readonly api: ApiClient;
  private readonly listeners: Listener[] = [];
  private state: ViewState = {
    info: null,
    session: null,
    active: 'schema',
    pending: false,
    error: null,
    whatIf: null,
  };

  constructor(api: ApiClient) {
    this.api = api;
  }

  getState(): ViewState {
    return { ...this.state };
  }

  onChange(listener: Listener): void {
    this.listeners.push(listener);
  }

  private update(partial: Partial<ViewState>): void {
    this.state = { ...this.state, ...partial };
    for (const listener of this.listeners) {
      listener(this.getState());
    }
  }

  /** Load config and either resume an existing session or start a fresh one. */
  async init(sessionId?: string): Promise<void> {
    const info = await this.api.getConfig();
    this.update({ info });
    const session = sessionId ? await this.api.getSession(sessionId) : await this.api.createSession();
    this.update({ session, active: this.firstOpenStep(session) });
  }

  private firstOpenStep(session: SessionState): StepId {
    for (const step of STEP_ORDER) {
      if (!stepDone(session, step)) {
        return step;
      }
    }
    return 'explain';
  }

  setActive(step: StepId): void {
    if (stepEnabled(this.state.session, step)) {
      this.update({ active: step, error: null, whatIf: null });
    }
  }

  /** One in-flight mutation at a time; the caller's button is disabled meanwhile. */
  private async mutate(call: () => Promise<SessionState>): Promise<void> {
    if (this.state.pending || !this.state.session) {
      return;
    }
    this.update({ pending: true, error: null });
    try {
      const session = await call();
      this.update({ session, pending: false });
    } catch (error) {
      if (error instanceof ApiError) {
        this.update({
          pending: false,
          error: { code: error.code, message: error.message, findings: error.findings },
        });
        return;
      }
      this.update({ pending: false, error: { code: 'network_error', message: String(error) } });
    }
  }

  /** Client-side guard only for emptiness; everything else is the server's call. */
  async submit(instruction: string): Promise<void> {
    const step = this.state.active;
    const session = this.state.session;
    if (!session) {
      return;
    }
    if (step !== 'explain' && !instruction.trim()) {
      this.update({
        error: { code: 'empty_instruction', message: 'Enter an instruction before submitting.' },
      });
      return;
    }
    const id = session.id;
    if (step === 'schema') {
      const correcting = stepDone(session, 'schema');
      await this.mutate(() =>
        correcting ? this.api.correctSchema(id, instruction) : this.api.extendSchema(id, instruction),
      );
    } else if (step === 'instance') {
      await this.mutate(() => this.api.createInstance(id, instruction));
    } else if (step === 'policy') {
      await this.mutate(() => this.api.createPolicy(id, instruction));
    } else {
      await this.mutate(() => this.api.explain(id));
    }
  }

  async runWhatIf(country: string, timestamp: string, action: string): Promise<void> {
    const session = this.state.session;
    if (!session || this.state.pending) {
      return;
    }
    this.update({ pending: true, error: null });
    try {
      const decision = await this.api.evaluatePolicy(session.id, country, timestamp, action || 'use');
      this.update({ whatIf: decision, pending: false });
    } catch (error) {
      if (error instanceof ApiError) {
        this.update({
          pending: false,
          error: { code: error.code, message: error.message, findings: error.findings },
        });
        return;
      }
      this.update({ pending: false, error: { code: 'network_error', message: String(error) } });
    }
  }
}

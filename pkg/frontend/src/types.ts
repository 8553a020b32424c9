/** Wire types for the fairmeta service API. */

export interface ServiceInfo {
  mode: 'fixture' | 'live';
  model_id: string;
  backend_url: string | null;
  sparql_endpoint: string;
  prompts_leave_machine: boolean;
  max_retries: number;
}

export interface Provenance {
  model_id: string;
  attempts: number;
  timestamp: string;
}

export interface Artifacts {
  shapes_turtle: string | null;
  instance_turtle: string | null;
  policy_turtle: string | null;
  explanation_text: string | null;
  diagram_text: string | null;
  provenance: Record<string, Provenance>;
}

export interface ConstraintDiff {
  shape: string;
  path: string;
  details: Record<string, string>;
}

export interface ConstraintChange {
  shape: string;
  path: string;
  field: string;
  old: string | null;
  new: string | null;
}

export interface ShapeDelta {
  added_shapes: string[];
  removed_shapes: string[];
  added: ConstraintDiff[];
  removed: ConstraintDiff[];
  changed: ConstraintChange[];
}

export interface RepairRound {
  findings: string[];
  correction_prompt: string;
}

export interface WireToolCall {
  id: string;
  type: 'function';
  function: { name: string; arguments: string };
}

export interface WireMessage {
  role: 'system' | 'user' | 'assistant' | 'tool';
  content: string;
  tool_calls?: WireToolCall[];
  tool_call_id?: string;
}

export interface WireConversation {
  model: string;
  messages: WireMessage[];
}

/** The session payload every mutating endpoint and GET /sessions/{id} return. */
export interface SessionState {
  id: string;
  created_at: string;
  model_id: string;
  tasks_done: string[];
  artifacts: Artifacts;
  repair_logs: Record<string, RepairRound[]>;
  shape_delta: ShapeDelta | null;
  observed_pids: string[];
  transcripts: Record<string, WireConversation>;
}

export interface Decision {
  outcome: 'Permit' | 'Deny' | 'NotApplicable';
  reasons: string[];
}

export interface ApiErrorBody {
  code: string;
  message: string;
  findings?: string[];
}

export type StepId = 'schema' | 'instance' | 'policy' | 'explain';

export const STEP_ORDER: StepId[] = ['schema', 'instance', 'policy', 'explain'];

export const STEP_TITLES: Record<StepId, string> = {
  schema: 'Extend Schema',
  instance: 'Create Instance',
  policy: 'Create Policy',
  explain: 'Explain',
};

/** Pure view functions: state in, HTML string out. No fetches, no globals. */

import { instanceSummary, policySummary, SummaryRow } from './summary.js';
import type {
  ConstraintChange,
  ConstraintDiff,
  Decision,
  RepairRound,
  ServiceInfo,
  SessionState,
  ShapeDelta,
  StepId,
  WireConversation,
} from './types.js';
import { STEP_ORDER, STEP_TITLES } from './types.js';

export function escapeHtml(value: string): string {
  return value
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;')
    .replace(/'/g, '&#39;');
}

/** Minimal Turtle highlighting over escaped text (display only). */
export function highlightTurtle(turtle: string): string {
  return escapeHtml(turtle)
    .replace(/(&quot;(?:[^&]|&(?!quot;))*?&quot;)/g, '<span class="tok-str">$1</span>')
    .replace(/(@prefix|@base)(?=\s)/g, '<span class="tok-kw">$1</span>')
    .replace(/(&lt;[^&\s]*&gt;)/g, '<span class="tok-iri">$1</span>')
    .replace(/(^|\s)(a)(?=\s)/g, '$1<span class="tok-kw">$2</span>')
    .replace(/([A-Za-z][\w.-]*:)(?![/])/g, '<span class="tok-pfx">$1</span>');
}

export function renderBanner(info: ServiceInfo | null): string {
  if (!info) {
    return '<div class="banner banner-unknown" data-testid="mode-banner">connecting…</div>';
  }
  if (info.mode === 'fixture') {
    return (
      '<div class="banner banner-fixture" data-testid="mode-banner">' +
      'FIXTURE MODE: scripted replay, prompts never leave this machine</div>'
    );
  }
  return (
    '<div class="banner banner-live" data-testid="mode-banner">' +
    `LIVE MODE: prompts are sent to ${escapeHtml(info.backend_url ?? 'a remote backend')} ` +
    `(model ${escapeHtml(info.model_id)})</div>`
  );
}

export function stepDone(session: SessionState | null, step: StepId): boolean {
  return session !== null && session.tasks_done.includes(step);
}

/** Step k is enabled when every earlier step finished (guided flow). */
export function stepEnabled(session: SessionState | null, step: StepId): boolean {
  if (!session) {
    return false;
  }
  const index = STEP_ORDER.indexOf(step);
  return STEP_ORDER.slice(0, index).every((previous) => stepDone(session, previous));
}

export function renderStepper(session: SessionState | null, active: StepId): string {
  const items = STEP_ORDER.map((step, i) => {
    const classes = ['step'];
    if (step === active) classes.push('active');
    if (stepDone(session, step)) classes.push('done');
    if (!stepEnabled(session, step)) classes.push('disabled');
    return (
      `<li class="${classes.join(' ')}" data-step="${step}" data-testid="step-${step}">` +
      `${i + 1}. ${STEP_TITLES[step]}</li>`
    );
  });
  return `<ol class="stepper">${items.join('')}</ol>`;
}

function diffEntry(entry: ConstraintDiff): string {
  const details = Object.entries(entry.details)
    .map(([key, value]) => `${escapeHtml(key)}=${escapeHtml(value)}`)
    .join(', ');
  return (
    `<li><code>${escapeHtml(entry.path)}</code> <span class="diff-shape">on ${escapeHtml(entry.shape)}</span>` +
    (details ? ` <span class="diff-details">(${details})</span>` : '') +
    '</li>'
  );
}

function changeEntry(entry: ConstraintChange): string {
  return (
    `<li><code>${escapeHtml(entry.path)}</code> ${escapeHtml(entry.field)}: ` +
    `${escapeHtml(entry.old ?? 'none')} &rarr; ${escapeHtml(entry.new ?? 'none')}</li>`
  );
}

export function renderDiffPane(delta: ShapeDelta | null): string {
  if (!delta) {
    return '<div class="diff-pane" data-testid="diff-pane"><p class="muted">no schema change yet</p></div>';
  }
  const sections: string[] = [];
  if (delta.added_shapes.length) {
    sections.push(
      `<h4>Added shapes</h4><ul class="diff-added">${delta.added_shapes
        .map((shape) => `<li>${escapeHtml(shape)}</li>`)
        .join('')}</ul>`,
    );
  }
  if (delta.removed_shapes.length) {
    sections.push(
      `<h4>Removed shapes</h4><ul class="diff-removed">${delta.removed_shapes
        .map((shape) => `<li>${escapeHtml(shape)}</li>`)
        .join('')}</ul>`,
    );
  }
  if (delta.added.length) {
    sections.push(`<h4>Added constraints</h4><ul class="diff-added">${delta.added.map(diffEntry).join('')}</ul>`);
  }
  if (delta.removed.length) {
    sections.push(
      `<h4>Removed constraints</h4><ul class="diff-removed">${delta.removed.map(diffEntry).join('')}</ul>`,
    );
  }
  if (delta.changed.length) {
    sections.push(`<h4>Changed constraints</h4><ul class="diff-changed">${delta.changed.map(changeEntry).join('')}</ul>`);
  }
  if (!sections.length) {
    sections.push('<p class="muted">no constraint-level differences</p>');
  }
  return `<div class="diff-pane" data-testid="diff-pane">${sections.join('')}</div>`;
}

export function renderRepairLog(rounds: RepairRound[] | undefined): string {
  if (!rounds || !rounds.length) {
    return '<div class="repair-log" data-testid="repair-log"><p class="muted">accepted on the first attempt</p></div>';
  }
  const items = rounds.map(
    (round, i) =>
      `<li><strong>Repair turn ${i + 1}</strong><ul>${round.findings
        .map((finding) => `<li class="finding">${escapeHtml(finding)}</li>`)
        .join('')}</ul></li>`,
  );
  return `<div class="repair-log" data-testid="repair-log"><ol>${items.join('')}</ol></div>`;
}

export function renderTranscript(conversation: WireConversation | undefined): string {
  if (!conversation || !conversation.messages.length) {
    return '<div class="transcript" data-testid="transcript"><p class="muted">no prompts submitted yet</p></div>';
  }
  const rows = conversation.messages.map((message) => {
    const body = message.content
      ? escapeHtml(message.content)
      : (message.tool_calls ?? [])
          .map((call) => `→ ${escapeHtml(call.function.name)}(${escapeHtml(call.function.arguments)})`)
          .join('<br>');
    return `<div class="msg msg-${message.role}"><span class="role">${message.role}</span><pre>${body}</pre></div>`;
  });
  return `<div class="transcript" data-testid="transcript">${rows.join('')}</div>`;
}

function summaryTable(rows: SummaryRow[]): string {
  if (!rows.length) {
    return '';
  }
  const body = rows
    .map((row) => `<tr><th>${escapeHtml(row.label)}</th><td>${escapeHtml(row.value)}</td></tr>`)
    .join('');
  return `<table class="summary">${body}</table>`;
}

export function renderArtifact(kind: StepId, session: SessionState | null): string {
  if (!session) {
    return '<div class="artifact" data-testid="artifact"><p class="muted">no artifact yet</p></div>';
  }
  const artifacts = session.artifacts;
  let raw: string | null = null;
  let summary = '';
  if (kind === 'schema') {
    raw = artifacts.shapes_turtle;
  } else if (kind === 'instance') {
    raw = artifacts.instance_turtle;
    if (raw) summary = summaryTable(instanceSummary(raw));
  } else if (kind === 'policy') {
    raw = artifacts.policy_turtle;
    if (raw) summary = summaryTable(policySummary(raw));
  } else {
    raw = artifacts.explanation_text;
    if (raw) {
      return `<div class="artifact" data-testid="artifact"><pre class="prose">${escapeHtml(raw)}</pre></div>`;
    }
  }
  if (!raw) {
    return '<div class="artifact" data-testid="artifact"><p class="muted">no artifact yet</p></div>';
  }
  return (
    `<div class="artifact" data-testid="artifact">${summary}` +
    `<pre class="turtle">${highlightTurtle(raw)}</pre></div>`
  );
}

export function renderError(error: { code: string; message: string; findings?: string[] } | null): string {
  if (!error) {
    return '<div class="error-box hidden" data-testid="error-box"></div>';
  }
  const findings = (error.findings ?? [])
    .map((finding) => `<li>${escapeHtml(finding)}</li>`)
    .join('');
  return (
    `<div class="error-box" data-testid="error-box"><code>${escapeHtml(error.code)}</code> ` +
    `${escapeHtml(error.message)}${findings ? `<ul>${findings}</ul>` : ''}</div>`
  );
}

export function renderWhatIf(decision: Decision | null, pending: boolean): string {
  const disabled = pending ? 'disabled' : '';
  const result = decision
    ? `<div class="whatif-result outcome-${decision.outcome.toLowerCase()}" data-testid="whatif-result">` +
      `<strong>${decision.outcome}</strong><ul>${decision.reasons
        .map((reason) => `<li>${escapeHtml(reason)}</li>`)
        .join('')}</ul></div>`
    : '<div class="whatif-result" data-testid="whatif-result"></div>';
  return (
    '<form class="whatif" data-testid="whatif-form">' +
    '<h4>What if…</h4>' +
    `<label>Country <input name="country" value="DE" maxlength="2" ${disabled}></label>` +
    `<label>Timestamp <input name="timestamp" value="2024-01-01T00:00:00" ${disabled}></label>` +
    `<label>Action <input name="action" value="use" ${disabled}></label>` +
    `<button type="submit" data-action="whatif" ${disabled}>Evaluate</button>` +
    '</form>' +
    result
  );
}

export interface StepViewState {
  session: SessionState | null;
  active: StepId;
  pending: boolean;
  error: { code: string; message: string; findings?: string[] } | null;
  whatIf: Decision | null;
}

export function renderStepPanel(view: StepViewState): string {
  const { session, active, pending } = view;
  const enabled = stepEnabled(session, active) && !pending;
  const done = stepDone(session, active);
  const disabledAttr = enabled ? '' : 'disabled';
  const isSchema = active === 'schema';
  const needsInstruction = active !== 'explain';
  const submitLabel = done && isSchema ? 'Send correction' : STEP_TITLES[active];
  const instructionBox = needsInstruction
    ? `<textarea name="instruction" data-testid="instruction" placeholder="Instruction for this step" ${disabledAttr}></textarea>`
    : '<p class="muted">The explanation runs on the stored artifacts; no instruction needed.</p>';
  const correctionNote =
    done && isSchema
      ? '<p class="hint">The schema exists; your text below is sent as a correction turn on the same conversation.</p>'
      : '';
  const retryNote =
    done && !isSchema && needsInstruction
      ? '<p class="hint">Submitting again regenerates this artifact with a fresh prompt.</p>'
      : '';
  const sections = [
    `<section class="panel" data-testid="panel-${active}">`,
    `<h3>${STEP_TITLES[active]}</h3>`,
    correctionNote,
    retryNote,
    instructionBox,
    `<button type="button" data-action="submit" data-testid="submit" ${disabledAttr}>${submitLabel}</button>`,
    renderError(view.error),
    '<h4>Prompt transcript</h4>',
    renderTranscript(session?.transcripts[active]),
    '<h4>Artifact</h4>',
    renderArtifact(active, session),
    '<h4>Validation and repair</h4>',
    renderRepairLog(session?.repair_logs[active]),
  ];
  if (isSchema) {
    sections.push('<h4>Diff vs previous schema</h4>');
    sections.push(renderDiffPane(session?.shape_delta ?? null));
  }
  if (active === 'policy' && stepDone(session, 'policy')) {
    sections.push(renderWhatIf(view.whatIf, pending));
  }
  sections.push('</section>');
  return sections.join('\n');
}

export function renderApp(view: StepViewState, info: ServiceInfo | null): string {
  return [
    renderBanner(info),
    `<header><h1>fairmeta curator</h1><span class="session-id">${escapeHtml(view.session?.id ?? '')}</span></header>`,
    renderStepper(view.session, view.active),
    renderStepPanel(view),
  ].join('\n');
}

import { describe, expect, it } from 'vitest';

import {
  escapeHtml,
  highlightTurtle,
  renderArtifact,
  renderBanner,
  renderDiffPane,
  renderError,
  renderStepper,
  renderWhatIf,
  stepEnabled,
} from '../src/render.js';
import type { ServiceInfo, SessionState } from '../src/types.js';
import { loadFixture } from './helpers.js';

const fixtureInfo = loadFixture<ServiceInfo>('config.json');

describe('escaping and highlighting', () => {
  it('escapes html-sensitive characters', () => {
    expect(escapeHtml('<script>"x" & \'y\'</script>')).toBe(
      '&lt;script&gt;&quot;x&quot; &amp; &#39;y&#39;&lt;/script&gt;',
    );
  });

  it('never leaks raw tags through turtle highlighting', () => {
    const html = highlightTurtle('<http://example.org/a> dcterms:title "<img onerror=x>" .');
    expect(html).not.toContain('<img');
    expect(html).toContain('tok-iri');
    expect(html).toContain('tok-str');
  });
});

describe('banner', () => {
  it('reports fixture mode as staying local', () => {
    const html = renderBanner(fixtureInfo);
    expect(html).toContain('FIXTURE MODE');
    expect(html).toContain('never leave');
  });

  it('reports live mode with the backend url', () => {
    const html = renderBanner({
      ...fixtureInfo,
      mode: 'live',
      backend_url: 'https://api.example/v1',
      prompts_leave_machine: true,
    });
    expect(html).toContain('LIVE MODE');
    expect(html).toContain('https://api.example/v1');
  });
});

describe('stepper and gating', () => {
  const created = loadFixture<SessionState>('session_created.json');
  const afterInstance = loadFixture<SessionState>('after_instance.json');

  it('marks later steps disabled on a fresh session', () => {
    const html = renderStepper(created, 'schema');
    expect(html).toMatch(/data-step="instance"[^>]*/);
    expect(html).toContain('disabled');
    expect(stepEnabled(created, 'explain')).toBe(false);
  });

  it('unlocks the policy step after the instance exists', () => {
    expect(stepEnabled(afterInstance, 'policy')).toBe(true);
    expect(stepEnabled(afterInstance, 'explain')).toBe(false);
  });
});

describe('diff pane', () => {
  it('renders added constraints from the extension', () => {
    const session = loadFixture<SessionState>('after_extend.json');
    const html = renderDiffPane(session.shape_delta);
    expect(html).toContain('Added constraints');
    expect(html).toContain('preferredNameForThePerson');
  });

  it('renders the removal after the correction turn', () => {
    const session = loadFixture<SessionState>('after_correct.json');
    const html = renderDiffPane(session.shape_delta);
    expect(html).toContain('Removed constraints');
    expect(html).toContain('preferredNameForThePerson');
    expect(html).toContain('Changed constraints');
    expect(html).toContain('dateOfProduction');
  });
});

describe('artifact panes', () => {
  const done = loadFixture<SessionState>('after_explain.json');

  it('shows the instance summary table plus highlighted turtle', () => {
    const html = renderArtifact('instance', done);
    expect(html).toContain('summary');
    expect(html).toContain('Der Wanderer über dem Nebelmeer');
    expect(html).toContain('118535889');
    expect(html).toContain('tok-pfx');
  });

  it('shows policy summary fields', () => {
    const html = renderArtifact('policy', done);
    expect(html).toContain('Spatial constraint');
    expect(html).toContain('DE');
    expect(html).toContain('2024-05-10T23:59:59');
  });

  it('renders nothing before an artifact is committed', () => {
    const created = loadFixture<SessionState>('session_created.json');
    expect(renderArtifact('instance', created)).toContain('no artifact yet');
  });
});

describe('errors and what-if', () => {
  it('renders machine code, message, and findings', () => {
    const html = renderError({
      code: 'repair_exhausted',
      message: 'still failing',
      findings: ['finding <one>'],
    });
    expect(html).toContain('repair_exhausted');
    expect(html).toContain('finding &lt;one&gt;');
  });

  it('renders a deny decision with its reasons', () => {
    const decision = loadFixture<{ outcome: 'Deny'; reasons: string[] }>('whatif_deny.json');
    const html = renderWhatIf(decision, false);
    expect(html).toContain('Deny');
    expect(html).toContain('spatial constraint');
  });

  it('disables the form while a request is pending', () => {
    const html = renderWhatIf(null, true);
    expect(html).toContain('disabled');
  });
});

/**
 * Display-only extraction of headline fields from artifact Turtle.
 *
 * This is presentation, not parsing: a line scan for the handful of
 * well-known predicates the summary table shows. All real validation and
 * diffing stays on the server.
 */

export interface SummaryRow {
  label: string;
  value: string;
}

function firstMatch(turtle: string, pattern: RegExp): string | null {
  const match = turtle.match(pattern);
  return match ? match[1] : null;
}

export function instanceSummary(turtle: string): SummaryRow[] {
  const rows: SummaryRow[] = [];
  const subject = firstMatch(turtle, /^(\S+)\s*$/m) ?? firstMatch(turtle, /^(\S+)\s+a\s/m);
  if (subject) {
    rows.push({ label: 'Identification', value: subject });
  }
  const title = firstMatch(turtle, /dcterms:title\s+"((?:[^"\\]|\\.)*)"(?:@[A-Za-z-]+)?/);
  if (title) {
    rows.push({ label: 'Title', value: title });
  }
  const policy = firstMatch(turtle, /odrl:hasPolicy\s+(<[^>]+>|\S+)/);
  if (policy) {
    rows.push({ label: 'Policy association', value: policy.replace(/[;.]$/, '').trim() });
  }
  const artistId = firstMatch(turtle, /gndo:gndIdentifier\s+"((?:[^"\\]|\\.)*)"/);
  if (artistId) {
    rows.push({ label: 'Artist PID (GND)', value: artistId });
  }
  const date = firstMatch(turtle, /gndo:dateOfProduction\s+"((?:[^"\\]|\\.)*)"/);
  if (date) {
    rows.push({ label: 'Date of production', value: date });
  }
  return rows;
}

export function policySummary(turtle: string): SummaryRow[] {
  const rows: SummaryRow[] = [];
  const action = firstMatch(turtle, /odrl:action\s+(\S+)/);
  if (action) {
    rows.push({ label: 'Action', value: action.replace(/[;.]$/, '') });
  }
  const target = firstMatch(turtle, /odrl:target\s+(<[^>]+>|\S+)/);
  if (target) {
    rows.push({ label: 'Target', value: target.replace(/[;.]$/, '') });
  }
  const spatial = firstMatch(turtle, /odrl:leftOperand\s+odrl:spatial[\s\S]*?odrl:rightOperand\s+"((?:[^"\\]|\\.)*)"/);
  if (spatial) {
    rows.push({ label: 'Spatial constraint', value: spatial });
  }
  const deadline = firstMatch(turtle, /odrl:leftOperand\s+odrl:dateTime[\s\S]*?odrl:rightOperand\s+"((?:[^"\\]|\\.)*)"/);
  if (deadline) {
    rows.push({ label: 'Valid until', value: deadline });
  }
  return rows;
}

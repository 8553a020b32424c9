/** DOM bootstrap: render into #app, delegate events to the controller. */

import { ApiClient } from './api.js';
import { WorkflowController } from './controller.js';
import { renderApp } from './render.js';
import type { StepId } from './types.js';
import { STEP_ORDER } from './types.js';

export function mount(root: HTMLElement, baseUrl: string): WorkflowController {
  const controller = new WorkflowController(new ApiClient(baseUrl));

  const draw = () => {
    const state = controller.getState();
    root.innerHTML = renderApp(
      {
        session: state.session,
        active: state.active,
        pending: state.pending,
        error: state.error,
        whatIf: state.whatIf,
      },
      state.info,
    );
    if (state.session) {
      window.location.hash = state.session.id;
    }
  };

  controller.onChange(draw);

  root.addEventListener('click', (event) => {
    const target = event.target as HTMLElement;
    const stepItem = target.closest('[data-step]') as HTMLElement | null;
    if (stepItem && !stepItem.classList.contains('disabled')) {
      controller.setActive(stepItem.dataset.step as StepId);
      return;
    }
    if (target.matches('[data-action="submit"]')) {
      const box = root.querySelector<HTMLTextAreaElement>('[data-testid="instruction"]');
      void controller.submit(box ? box.value : '');
    }
  });

  root.addEventListener('submit', (event) => {
    const form = event.target as HTMLFormElement;
    if (form.matches('[data-testid="whatif-form"]')) {
      event.preventDefault();
      const data = new FormData(form);
      void controller.runWhatIf(
        String(data.get('country') ?? '').toUpperCase(),
        String(data.get('timestamp') ?? ''),
        String(data.get('action') ?? 'use'),
      );
    }
  });

  const existing = window.location.hash.replace(/^#/, '') || undefined;
  void controller.init(existing).catch(() => controller.init());
  draw();
  return controller;
}

declare global {
  interface Window {
    fairmetaMount: typeof mount;
  }
}

if (typeof window !== 'undefined') {
  window.fairmetaMount = mount;
  const root = document.getElementById('app');
  if (root) {
    const base = root.dataset.apiBase || window.location.origin;
    mount(root, base);
  }
}

export { STEP_ORDER };

// Pure view helpers: the DOM produced here is a function of the payload.

import { PartitionEntry, SnapshotPayload, SsRuleJson, StepAction } from './api.js'

export const COLOR_CLASSES: Record<PartitionEntry['color'], string> = {
  violet: 'edge-violet',
  gray: 'edge-gray',
  black: 'edge-black',
}

// One class per nfa rule, in rule order (the DOT pane emits edges in the
// same order, so classes line up with Graphviz's g.edge elements).
export function edgeColorClasses(payload: SnapshotPayload): string[] {
  return payload.partition.map((entry) => COLOR_CLASSES[entry.color])
}

// Processed dfa edges: the newest one is violet, the rest black.
export function dfaEdgeClasses(payload: SnapshotPayload): string[] {
  const count = payload.rule_tables.processed.length
  return payload.rule_tables.processed.map((_, i) =>
    i === count - 1 ? COLOR_CLASSES.violet : COLOR_CLASSES.black,
  )
}

export function renderDiagram(svgMarkup: string, classes: string[]): HTMLElement {
  const holder = document.createElement('div')
  holder.className = 'diagram'
  holder.innerHTML = svgMarkup
  holder.querySelectorAll('g.edge').forEach((g, i) => {
    if (i < classes.length) g.classList.add(classes[i])
  })
  return holder
}

function superStateText(members: string[]): string {
  return members.length ? `(${members.join(' ')})` : '(ds)'
}

function ssRuleText(rule: SsRuleJson): string {
  return `${superStateText(rule.src)} ${rule.sym} ${superStateText(rule.dst)}`
}

function listSection(title: string, items: string[], cls: string): HTMLElement {
  const section = document.createElement('section')
  section.className = cls
  const heading = document.createElement('h3')
  heading.textContent = title
  section.appendChild(heading)
  const list = document.createElement('ul')
  for (const item of items) {
    const li = document.createElement('li')
    li.textContent = item
    list.appendChild(li)
  }
  section.appendChild(list)
  return section
}

export function renderTables(payload: SnapshotPayload): HTMLElement {
  const wrap = document.createElement('div')
  wrap.className = 'tables'
  const { processed, unprocessed, names, empties } = payload.rule_tables
  const processedItems = processed.map(ssRuleText)
  if (processedItems.length) {
    processedItems[processedItems.length - 1] += '   « newest'
  }
  wrap.appendChild(listSection('processed super-state rules', processedItems,
    'processed-rules'))
  wrap.appendChild(listSection('unprocessed super-state rules',
    unprocessed.map(ssRuleText), 'unprocessed-rules'))
  wrap.appendChild(listSection('state names',
    names.map((n) => `${superStateText(n.members)} → ${n.name}`), 'name-table'))
  wrap.appendChild(listSection('empties',
    empties.map((e) => `E(${e.state}) = ${superStateText(e.closure)}`),
    'empties-table'))
  return wrap
}

export function renderLegend(): HTMLElement {
  const legend = document.createElement('div')
  legend.className = 'legend'
  const entries: [string, string][] = [
    ['edge-violet', 'used by the newest dfa edge'],
    ['edge-gray', 'used by earlier dfa edges'],
    ['edge-black', 'not used yet'],
  ]
  for (const [cls, text] of entries) {
    const item = document.createElement('span')
    item.className = `legend-item ${cls}`
    item.textContent = text
    legend.appendChild(item)
  }
  return legend
}

export interface ControlState {
  pending: boolean
  canForward: boolean
  canBackward: boolean
  haveSession: boolean
}

export function renderControls(
  state: ControlState,
  onAction: (action: StepAction) => void,
): HTMLElement {
  const bar = document.createElement('div')
  bar.className = 'controls'
  const buttons: [StepAction, string, boolean][] = [
    ['reset', '⇤ reset', state.haveSession && !state.pending],
    ['backward', '← back', state.haveSession && !state.pending && state.canBackward],
    ['forward', 'forward →', state.haveSession && !state.pending && state.canForward],
    ['finish', 'finish ⇥', state.haveSession && !state.pending],
  ]
  for (const [action, text, enabled] of buttons) {
    const button = document.createElement('button')
    button.dataset.action = action
    button.textContent = text
    button.disabled = !enabled
    button.addEventListener('click', () => onAction(action))
    bar.appendChild(button)
  }
  return bar
}

export function renderErrors(errors: string[]): HTMLElement {
  const banner = document.createElement('div')
  banner.className = 'errors'
  for (const message of errors) {
    const line = document.createElement('p')
    line.textContent = message
    banner.appendChild(line)
  }
  return banner
}

export function renderStatus(payload: SnapshotPayload | null): HTMLElement {
  const status = document.createElement('div')
  status.className = 'status'
  status.textContent = payload
    ? `step ${payload.cursor} of ${payload.total}`
    : 'no machine loaded'
  return status
}

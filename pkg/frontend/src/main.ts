// Application wiring: editor, panes, controls, tables, keyboard bindings.

import { instance } from '@viz-js/viz'

import { ApiClient, StepAction } from './api.js'
import { SessionModel, UiState } from './model.js'
import { attachPanZoom } from './panzoom.js'
import { DEFAULT_SAMPLE, SAMPLES } from './samples.js'
import {
  dfaEdgeClasses,
  edgeColorClasses,
  renderControls,
  renderDiagram,
  renderErrors,
  renderLegend,
  renderStatus,
  renderTables,
} from './view.js'

async function boot(): Promise<void> {
  const viz = await instance()
  const model = new SessionModel(new ApiClient())
  const root = document.getElementById('app')
  if (!root) throw new Error('missing #app element')

  const editor = document.createElement('textarea')
  editor.className = 'editor'
  editor.value = SAMPLES[DEFAULT_SAMPLE]

  const picker = document.createElement('select')
  for (const name of Object.keys(SAMPLES)) {
    const option = document.createElement('option')
    option.value = name
    option.textContent = name
    picker.appendChild(option)
  }
  picker.value = DEFAULT_SAMPLE
  picker.addEventListener('change', () => {
    editor.value = SAMPLES[picker.value]
  })

  const loadButton = document.createElement('button')
  loadButton.textContent = 'load machine'
  loadButton.addEventListener('click', () => void model.load(editor.value))

  const editorBar = document.createElement('div')
  editorBar.className = 'editor-bar'
  editorBar.append(picker, loadButton)

  const left = document.createElement('div')
  left.className = 'input-column'
  left.append(editorBar, editor)

  const stage = document.createElement('div')
  stage.className = 'stage'
  root.append(left, stage)

  const onAction = (action: StepAction) => void model.step(action)

  const render = (state: UiState) => {
    stage.replaceChildren()
    stage.appendChild(renderErrors(state.errors))
    stage.appendChild(
      renderControls(
        {
          pending: state.pending,
          canForward: state.payload?.can_forward ?? false,
          canBackward: state.payload?.can_backward ?? false,
          haveSession: state.sessionId != null,
        },
        onAction,
      ),
    )
    stage.appendChild(renderStatus(state.payload))
    stage.appendChild(renderLegend())
    if (!state.payload) return

    const panes = document.createElement('div')
    panes.className = 'panes'
    const nfaSvg = viz.renderString(state.payload.nfa_dot, { format: 'svg' })
    const dfaSvg = viz.renderString(state.payload.dfa_dot, { format: 'svg' })
    const nfaPane = renderDiagram(nfaSvg, edgeColorClasses(state.payload))
    const dfaPane = renderDiagram(dfaSvg, dfaEdgeClasses(state.payload))
    nfaPane.classList.add('nfa-pane')
    dfaPane.classList.add('dfa-pane')
    panes.append(nfaPane, dfaPane)
    stage.appendChild(panes)
    attachPanZoom(nfaPane)
    attachPanZoom(dfaPane)

    stage.appendChild(renderTables(state.payload))
  }

  model.subscribe(render)
  render(model.current)

  document.addEventListener('keydown', (event) => {
    if (event.target === editor) return
    const binding: Record<string, StepAction> = {
      ArrowRight: 'forward',
      ArrowLeft: 'backward',
      End: 'finish',
      Home: 'reset',
    }
    const action = binding[event.key]
    if (action) {
      event.preventDefault()
      void model.step(action)
    }
  })
}

void boot()

// Session view-model: one in-flight request at a time, boundary-aware.

import { ApiClient, ApiError, SnapshotPayload, StepAction } from './api.js'

export interface UiState {
  sessionId: string | null
  payload: SnapshotPayload | null
  pending: boolean
  errors: string[]
}

export function describeError(err: unknown): string[] {
  if (err instanceof ApiError) {
    if (err.body.errors?.length) {
      return err.body.errors.map((e) =>
        e.line != null ? `line ${e.line}, col ${e.col}: ${e.message}` : e.message,
      )
    }
    if (err.body.code) return [err.body.code]
    return [`request failed (${err.status})`]
  }
  return [String(err)]
}

export class SessionModel {
  private state: UiState = {
    sessionId: null,
    payload: null,
    pending: false,
    errors: [],
  }
  private listeners: ((state: UiState) => void)[] = []

  constructor(private api: ApiClient) {}

  get current(): UiState {
    return this.state
  }

  subscribe(listener: (state: UiState) => void): void {
    this.listeners.push(listener)
  }

  private update(patch: Partial<UiState>): void {
    this.state = { ...this.state, ...patch }
    for (const listener of this.listeners) listener(this.state)
  }

  canStep(action: StepAction): boolean {
    const payload = this.state.payload
    if (!payload || this.state.pending) return false
    if (action === 'forward') return payload.can_forward
    if (action === 'backward') return payload.can_backward
    return true
  }

  async load(text: string): Promise<void> {
    if (this.state.pending) return
    this.update({ pending: true, errors: [] })
    try {
      const res = await this.api.createSession(text)
      this.update({ sessionId: res.id, payload: res.payload, pending: false })
    } catch (err) {
      this.update({
        sessionId: null,
        payload: null,
        pending: false,
        errors: describeError(err),
      })
    }
  }

  async step(action: StepAction): Promise<void> {
    const sid = this.state.sessionId
    if (!sid || !this.canStep(action)) return
    this.update({ pending: true })
    try {
      const res = await this.api.step(sid, action)
      this.update({ payload: res.payload, pending: false, errors: [] })
    } catch (err) {
      if (err instanceof ApiError && err.status === 409) {
        // The cursor was already at the boundary; re-sync the view.
        const res = await this.api.getSession(sid)
        this.update({ payload: res.payload, pending: false })
        return
      }
      this.update({ pending: false, errors: describeError(err) })
    }
  }
}

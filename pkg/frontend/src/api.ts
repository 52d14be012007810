// Client for the session API: create, inspect, step, delete.

export type StepAction = 'forward' | 'backward' | 'finish' | 'reset'

export interface SsRuleJson {
  src: string[]
  sym: string
  dst: string[]
}

export interface PartitionEntry {
  src: string
  label: string // alphabet symbol or "eps"
  dst: string
  color: 'violet' | 'gray' | 'black'
}

export interface RuleTables {
  processed: SsRuleJson[]
  unprocessed: SsRuleJson[]
  names: { members: string[]; name: string }[]
  empties: { state: string; closure: string[] }[]
}

export interface SnapshotPayload {
  cursor: number
  total: number
  can_forward: boolean
  can_backward: boolean
  nfa_dot: string
  dfa_dot: string
  rule_tables: RuleTables
  partition: PartitionEntry[]
}

export interface SessionResponse {
  id: string
  payload: SnapshotPayload
}

export interface ApiErrorBody {
  code?: string
  errors?: { line: number | null; col: number | null; message: string }[]
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly body: ApiErrorBody,
  ) {
    super(`request failed with status ${status}`)
  }
}

async function throwApiError(res: Response): Promise<never> {
  let body: ApiErrorBody = {}
  try {
    const data = await res.json()
    body = data?.detail ?? data ?? {}
  } catch {
    // non-JSON body; keep the bare status
  }
  throw new ApiError(res.status, body)
}

export class ApiClient {
  constructor(readonly base: string = '') {}

  async createSession(text: string): Promise<SessionResponse> {
    const res = await fetch(`${this.base}/api/sessions`, {
      method: 'POST',
      headers: { 'content-type': 'text/plain; charset=utf-8' },
      body: text,
    })
    if (!res.ok) await throwApiError(res)
    return res.json()
  }

  async getSession(id: string): Promise<SessionResponse> {
    const res = await fetch(`${this.base}/api/sessions/${id}`)
    if (!res.ok) await throwApiError(res)
    return res.json()
  }

  async step(id: string, action: StepAction): Promise<SessionResponse> {
    const res = await fetch(`${this.base}/api/sessions/${id}/step`, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify({ action }),
    })
    if (!res.ok) await throwApiError(res)
    return res.json()
  }

  async deleteSession(id: string): Promise<void> {
    await fetch(`${this.base}/api/sessions/${id}`, { method: 'DELETE' })
  }
}

import type {
  CandidatePage,
  GoldEntry,
  LemmaSuggestion,
  RunStats,
  Verdict,
  VerdictConflict,
} from './types.js';

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

/** A 409 from POST /verdict or /false-negative, carrying both sides. */
export class ConflictError extends Error {
  constructor(readonly conflict: VerdictConflict) {
    super('conflicting verdict');
  }
}

async function parseError(response: Response): Promise<never> {
  let detail = response.statusText;
  try {
    const body = (await response.json()) as { error?: string };
    if (body.error) detail = body.error;
  } catch {
    /* non-JSON error body */
  }
  throw new ApiError(response.status, detail);
}

export interface CandidateQuery {
  offset?: number;
  limit?: number;
  category?: string;
  minScore?: number;
}

export class ApiClient {
  constructor(readonly baseUrl: string = '') {}

  private url(path: string, params?: Record<string, string | number | undefined>): string {
    const query = Object.entries(params ?? {})
      .filter(([, v]) => v !== undefined && v !== '')
      .map(([k, v]) => `${encodeURIComponent(k)}=${encodeURIComponent(String(v))}`)
      .join('&');
    return `${this.baseUrl}${path}${query ? `?${query}` : ''}`;
  }

  private async getJson<T>(path: string, params?: Record<string, string | number | undefined>): Promise<T> {
    const response = await fetch(this.url(path, params));
    if (!response.ok) await parseError(response);
    return (await response.json()) as T;
  }

  private async postJson<T>(path: string, body: unknown): Promise<T> {
    const response = await fetch(this.url(path), {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(body),
    });
    if (response.status === 409) {
      throw new ConflictError((await response.json()) as VerdictConflict);
    }
    if (!response.ok) await parseError(response);
    return (await response.json()) as T;
  }

  candidates(query: CandidateQuery = {}): Promise<CandidatePage> {
    return this.getJson<CandidatePage>('/candidates', {
      offset: query.offset,
      limit: query.limit,
      category: query.category,
      minScore: query.minScore,
    });
  }

  postVerdict(grams: string[], category: string, verdict: Verdict,
              meaning?: string): Promise<{ entry: GoldEntry }> {
    return this.postJson('/verdict', { grams, category, verdict, meaning });
  }

  postFalseNegative(grams: string[], category: string,
                    meaning?: string): Promise<{ entry: GoldEntry }> {
    return this.postJson('/false-negative', { grams, category, meaning });
  }

  goldExport(): Promise<{ entries: GoldEntry[] }> {
    return this.getJson('/gold/export');
  }

  lemmatize(word: string, level: number): Promise<LemmaSuggestion> {
    return this.getJson('/lemmatize', { word, level });
  }

  stats(): Promise<RunStats> {
    return this.getJson('/stats');
  }
}

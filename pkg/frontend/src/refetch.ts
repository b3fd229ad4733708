/**
 * One descriptor refetch per settled control value.
 *
 * Slider drags fire a burst of input events; the scheduler debounces them
 * and aborts any in-flight request the moment a newer value supersedes it,
 * so exactly one fetch reaches the network per settled value and stale
 * responses can never clobber fresh ones.
 */

export type Fetcher<P, R> = (params: P, signal: AbortSignal) => Promise<R>;

export class RefetchScheduler<P, R> {
  private timer: ReturnType<typeof setTimeout> | null = null;
  private inflight: AbortController | null = null;
  private generation = 0;

  constructor(
    private fetcher: Fetcher<P, R>,
    private onResult: (result: R) => void,
    private onError: (error: unknown) => void = () => {},
    private settleMs = 120,
  ) {}

  /** Call on every control change; fetches once the value settles. */
  request(params: P): void {
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = setTimeout(() => {
      this.timer = null;
      this.fire(params);
    }, this.settleMs);
  }

  /** Fetch immediately (initial load, programmatic changes). */
  fire(params: P): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
    if (this.inflight) this.inflight.abort();
    const controller = new AbortController();
    this.inflight = controller;
    const generation = ++this.generation;
    this.fetcher(params, controller.signal).then(
      (result) => {
        if (generation === this.generation) {
          this.inflight = null;
          this.onResult(result);
        }
      },
      (error) => {
        if (generation === this.generation && !controller.signal.aborted) {
          this.inflight = null;
          this.onError(error);
        }
      },
    );
  }

  dispose(): void {
    if (this.timer !== null) clearTimeout(this.timer);
    if (this.inflight) this.inflight.abort();
  }
}

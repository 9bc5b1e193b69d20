/**
 * Create a debounced function with its own timer; trailing-edge only.
 * Point edits funnel through this so rapid clicks coalesce into one
 * recompute request.
 */
export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  ms: number
): (...args: A) => void {
  let timer: ReturnType<typeof setTimeout> | undefined;
  return (...args: A) => {
    if (timer !== undefined) clearTimeout(timer);
    timer = setTimeout(() => {
      timer = undefined;
      fn(...args);
    }, ms);
  };
}

export const RECOMPUTE_DEBOUNCE_MS = 150;

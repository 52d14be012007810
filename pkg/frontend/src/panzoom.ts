// Basic wheel-zoom and drag-pan for the diagram panes.

export function attachPanZoom(holder: HTMLElement): void {
  const svg = holder.querySelector('svg')
  if (!svg) return
  let scale = 1
  let tx = 0
  let ty = 0
  let dragging = false
  let lastX = 0
  let lastY = 0

  const apply = () => {
    svg.style.transform = `translate(${tx}px, ${ty}px) scale(${scale})`
    svg.style.transformOrigin = '0 0'
  }

  holder.addEventListener('wheel', (event) => {
    event.preventDefault()
    const factor = event.deltaY < 0 ? 1.1 : 1 / 1.1
    scale = Math.min(8, Math.max(0.2, scale * factor))
    apply()
  })
  holder.addEventListener('pointerdown', (event) => {
    dragging = true
    lastX = event.clientX
    lastY = event.clientY
    holder.setPointerCapture(event.pointerId)
  })
  holder.addEventListener('pointermove', (event) => {
    if (!dragging) return
    tx += event.clientX - lastX
    ty += event.clientY - lastY
    lastX = event.clientX
    lastY = event.clientY
    apply()
  })
  holder.addEventListener('pointerup', () => {
    dragging = false
  })
}

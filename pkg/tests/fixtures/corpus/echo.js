// format a quantity with its unit
function formatQty(amount, unit) {
  const label = amount === 1 ? unit : unit + "s";
  return `${amount} ${label}`;
}

function percent(part, whole) {
  if (whole === 0) {
    return "0%";
  }
  return Math.round((part / whole) * 100) + "%";
}

namespace mdep {
}

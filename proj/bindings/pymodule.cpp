// populated once the core is stable

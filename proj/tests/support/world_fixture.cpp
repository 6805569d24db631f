// populated with shared test-world helpers as modules land

int eulersum_stub_constants;

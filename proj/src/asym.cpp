int eulersum_stub_asym;

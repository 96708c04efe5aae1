int eulersum_stub_identity;

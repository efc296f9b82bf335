import hypothesis

hypothesis.settings.register_profile("fibrook", max_examples=50, deadline=None)
hypothesis.settings.load_profile("fibrook")

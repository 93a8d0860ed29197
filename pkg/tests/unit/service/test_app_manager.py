from unittest.mock import MagicMock

from flask import Flask

from adr_tours.service import USE_CASES, MissionAppManager, create_app, health
from bisslog_schema.schema import UseCaseInfo, TriggerHttp, TriggerInfo


def _rules(app):
    return {(rule.rule, method) for rule in app.url_map.iter_rules()
            for method in rule.methods if method in ("GET", "POST")}


def test_default_service_routes():
    app = create_app(secret_key="secret")

    assert app.config["SECRET_KEY"] == "secret"
    assert {("/health", "GET"), ("/plan", "POST"), ("/fly", "POST"), ("/fly/<law>", "POST"),
            ("/tune", "POST"), ("/tune/<law>", "POST")} <= _rules(app)


def test_health_route():
    response = create_app().test_client().get("/health")

    assert response.status_code == 200
    assert response.json["status"] == "ok"
    assert response.json == health()


def test_law_route_maps_path_and_body():
    fly_info = next(info for info, _ in USE_CASES if info.keyname == "fly")
    fake_fly = MagicMock(return_value={"flights": []})
    app = create_app(use_cases=[(fly_info, fake_fly)])

    response = app.test_client().post(
        "/fly/ruggiero", json={"config": "mission.yml", "solution": "solution.json"})

    assert response.status_code == 200
    fake_fly.assert_called_once_with(law="ruggiero", config="mission.yml",
                                     solution="solution.json")


def test_plan_route_reports_configuration_errors():
    response = create_app().test_client().post(
        "/plan", json={"config": {"version": 2}, "catalog": []})

    assert response.status_code == 422
    assert response.json["error"] == "ConfigError"
    assert "version" in response.json["message"]


def test_manager_reuses_an_app_and_skips_other_triggers():
    processor = MagicMock()
    app = Flask("existing")
    consumer = TriggerInfo(keyname="queue", type="consumer", options=MagicMock())
    http = TriggerInfo(keyname="http", type="http",
                       options=TriggerHttp(method="GET", path="/x", allow_cors=False))
    info = UseCaseInfo(keyname="x", name="X", description="", type="sync",
                       triggers=[consumer, http])

    returned = MissionAppManager(processor)(app, [(info, MagicMock())])

    assert returned is app
    processor.assert_called_once()
    assert processor.call_args.args[2] is http
